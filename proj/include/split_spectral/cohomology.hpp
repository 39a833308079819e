#pragma once

/**
 * Free GF(2) models of H^1(Sigma, Z2) and H^1(Sbar, Z2) together with the
 * norm and pullback maps of the m-sheeted cover Sbar -> Sigma.
 *
 * No curve is ever built. The model realizes exactly the relations that the
 * Stiefel-Whitney computations depend on:
 *
 *   Nm o pullback = m * Id (mod 2)
 *   (pullback x, pullback y)_Sbar = m * (x, y)_Sigma
 *   (Nm F, x)_Sigma = (F, pullback x)_Sbar          (projection formula)
 *   0 -> ker Nm -> H^1(Sbar) -> H^1(Sigma) -> 0 is exact.
 *
 * Layout, with g = genus(Sigma), h = genus(Sbar), interleaved coordinates:
 *   m odd:  pullback is the inclusion of the first 2g coordinates and Nm is
 *           the projection onto them.
 *   m even: pullback sends the j-th coordinate to a_{j+1} (isotropic), and Nm
 *           reads b_1 .. b_{2g}, swapped pairwise so the projection formula
 *           holds. This needs h >= 2g, true for every m >= 2, g >= 2.
 */

#include <string>
#include <vector>

#include "split_spectral/covers.hpp"
#include "split_spectral/divisors.hpp"
#include "split_spectral/symplectic.hpp"

namespace split_spectral {

struct SurfaceCohomology {
  std::int64_t genus = 0;
  QuadraticRefinement q;  // mod-2 index of the chosen spin structure

  Z2 parity() const { return q.base_parity(); }
  Index dim() const { return q.dim(); }
  const SymplecticForm& form() const { return q.form(); }
};

SurfaceCohomology surface_cohomology(std::int64_t genus, Z2 parity);

class CoverCohomologyModel {
 public:
  /// Unchecked assembly from parts; call validate() to audit the relations.
  CoverCohomologyModel(CurveParams params, SurfaceCohomology sigma, SurfaceCohomology sbar, BitMatrix norm,
                       BitMatrix pullback, BitVector norm_shift);

  const CurveParams& params() const { return params_; }
  const SurfaceCohomology& sigma() const { return sigma_; }
  const SurfaceCohomology& sbar() const { return sbar_; }
  const BitMatrix& norm_matrix() const { return norm_; }
  const BitMatrix& pullback_matrix() const { return pullback_; }
  /// Constant added by norm(); zero in every model built by build_cover_model.
  const BitVector& norm_shift() const { return shift_; }
  Z2 m_parity() const { return Z2(params_.m); }

  BitVector norm(const BitVector& F) const;
  BitVector pullback(const BitVector& x) const;

  /// Human-readable descriptions of every relation above that fails.
  std::vector<std::string> validate() const;

 private:
  CurveParams params_;
  SurfaceCohomology sigma_;
  SurfaceCohomology sbar_;
  BitMatrix norm_;      // 2g x 2h
  BitMatrix pullback_;  // 2h x 2g
  BitVector shift_;
};

CoverCohomologyModel build_cover_model(const CurveParams& p, Z2 eps_sigma = Z2(0), Z2 eps_sbar = Z2(0));

/// Columns spanning ker Nm, i.e. Prym(Sbar, Sigma)[2] in the model.
BitMatrix prym_kernel_basis(const CoverCohomologyModel& model);

struct SplitReport {
  bool m_odd = false;
  bool holds = false;
  /// m odd: (dim ker Nm, dim im pullback).
  /// m even: graded pieces (dim im pullback, dim ker Nm / im pullback, dim H / ker Nm).
  std::vector<Index> dims;
  bool zero_intersection = false;  // m odd only
  bool section = false;            // m odd: Nm restricted to im pullback is onto
  bool filtration = false;         // m even: im pullback inside ker Nm
  std::vector<std::string> violations;
};

/// Direct sum H = ker Nm + im pullback for m odd; three-step filtration for m even.
SplitReport lemma_h_split(const CoverCohomologyModel& model);

/// Exactness of 0 -> ker Nm -> H^1(Sbar) -> H^1(Sigma) -> 0.
ExactSequenceCheck norm_sequence_check(const CoverCohomologyModel& model);

/// A point of the model of Prym(S, Sbar)[2] = H^1(Sbar) + (even subdivisors / b0).
struct PrymTwoTorsionPoint {
  BitVector h1_part;
  DivisorClass div_part;
};

struct SoFiberReport {
  std::int64_t dim_prym2 = 0;     // ambient model dimension 2h + N - 2
  std::int64_t dim_quotient = 0;  // computed by elimination
  std::int64_t expected = 0;      // N - 2
  int copies = 2;                 // indexed by w2(V) in {0, 1}
  BigInt points_per_copy;         // 2^{dim_quotient}
  bool holds = false;
};

/// Dimension of Prym(S, Sbar)[2] / rho^* H^1(Sbar) in the model, computed from
/// explicit spanning sets: the even-weight vectors of F2^N, the b0 line and
/// the H^1(Sbar) block.
SoFiberReport so_fiber_model(const CurveParams& p);

}  // namespace split_spectral
