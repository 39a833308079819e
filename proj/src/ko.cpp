#include "split_spectral/ko.hpp"

#include <string>

namespace split_spectral {

KOClass::KOClass(std::int64_t rank, BitVector w1, Z2 w2) : rank_(rank), w1_(std::move(w1)), w2_(w2) {}

KOClass KOClass::add(const KOClass& other, const SymplecticForm& form) const {
  if (dim() != other.dim() || dim() != form.dim()) throw DimensionMismatch("KO sum: w1 length mismatch");
  return KOClass(rank_ + other.rank_, w1_ + other.w1_, w2_ + other.w2_ + form.pairing(w1_, other.w1_));
}

KOClass alpha(const BitVector& x) { return KOClass(1, x, Z2(0)); }

KOClass omega_point(Index dim) { return KOClass(0, zero_vector(dim), Z2(1)); }

KOClass trivial_class(std::int64_t rank, Index dim) { return KOClass(rank, zero_vector(dim), Z2(0)); }

Z2 phi(const KOClass& c, const QuadraticRefinement& q) {
  if (c.dim() != q.dim()) {
    throw DimensionMismatch("phi: class over dimension " + std::to_string(c.dim()) + ", refinement over " +
                            std::to_string(q.dim()));
  }
  return Z2(c.rank() - 1) * q.base_parity() + q(c.w1()) + c.w2();
}

Z2 w2_from_phi(const KOClass& c, const QuadraticRefinement& q) {
  const Z2 phi_trivial_line = phi(trivial_class(1, c.dim()), q);
  return phi(c, q) + phi(alpha(c.w1()), q) + Z2(c.rank() - 1) * phi_trivial_line;
}

}  // namespace split_spectral
