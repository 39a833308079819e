#pragma once

/**
 * KO(Sigma) = Z + H^1(Sigma, Z2) + Z2 as triples (rank, w1, w2).
 *
 * Whitney sum: (r, x, u) + (s, y, v) = (r + s, x + y, u + v + (x, y)).
 * alpha(x) = (1, x, 0) is the class of the flat line bundle x and
 * Omega = O_p + O_p^* - 2 = (0, 0, 1).
 *
 * The mod-2 index of a class twisted by a spin structure whose index function
 * on line bundles is q (q(0) = parity of the spin structure) is
 *     phi(r, x, w) = (r - 1) q(0) + q(x) + w,
 * the additive extension of phi(trivial rank 1) = q(0), phi(alpha(x)) = q(x)
 * and phi(Omega) = 1.
 */

#include <cstdint>

#include "split_spectral/symplectic.hpp"

namespace split_spectral {

class KOClass {
 public:
  KOClass(std::int64_t rank, BitVector w1, Z2 w2);

  std::int64_t rank() const { return rank_; }
  const BitVector& w1() const { return w1_; }
  Z2 w2() const { return w2_; }
  Index dim() const { return w1_.size(); }

  /// Whitney sum; the forms must match the w1 length.
  KOClass add(const KOClass& other, const SymplecticForm& form) const;

  friend bool operator==(const KOClass& a, const KOClass& b) {
    return a.rank_ == b.rank_ && equal(a.w1_, b.w1_) && a.w2_ == b.w2_;
  }

 private:
  std::int64_t rank_;
  BitVector w1_;
  Z2 w2_;
};

KOClass alpha(const BitVector& x);
KOClass omega_point(Index dim);
KOClass trivial_class(std::int64_t rank, Index dim);

Z2 phi(const KOClass& c, const QuadraticRefinement& q);

/**
 * w2 recovered from indices: phi(c) + phi(det c) + (rank c - 1) phi(O).
 * For an even spin structure phi(O) = 0 and this is phi(c) + phi(det c).
 */
Z2 w2_from_phi(const KOClass& c, const QuadraticRefinement& q);

}  // namespace split_spectral
