#pragma once

/**
 * Stiefel-Whitney classes of SO(m, m+1) Higgs bundles from spectral data.
 *
 * A datum is a class F in H^1(Sbar, Z2), a divisor class D on the N
 * ramification points and the flag w2(V) choosing one of the two fibre
 * copies. The mod-2 indices of Sbar and Sigma are the refinements carried by
 * the cover model; the index of the pushforward of F equals the index of F
 * on Sbar, so
 *
 *   w1(V+) = Nm F
 *   w2(V+) = q_Sbar(F) + q_Sigma(Nm F)
 *   w2(V-) = w2(V+) + w2(V)
 *
 * D does not enter these values; it is carried for M.
 */

#include <cstdint>
#include <optional>

#include "split_spectral/cohomology.hpp"

namespace split_spectral {

struct SpectralDatum {
  BitVector F;
  DivisorClass D;
  Z2 w2_total;
};

struct SWClasses {
  BitVector w1_Vplus;
  Z2 w2_Vplus;
  Z2 w2_Vminus;
  std::int64_t M = 0;

  friend bool operator==(const SWClasses& a, const SWClasses& b) {
    return equal(a.w1_Vplus, b.w1_Vplus) && a.w2_Vplus == b.w2_Vplus && a.w2_Vminus == b.w2_Vminus &&
           a.M == b.M;
  }
};

/// Throws DimensionMismatch if F or D do not fit the model.
SWClasses sw_classes(const SpectralDatum& d, const CoverCohomologyModel& model);

/// Same classes through the case split on the twisted spin structure F (x) K_Sbar^{1/2}.
SWClasses sw_classes_corollary(const SpectralDatum& d, const CoverCohomologyModel& model);

/// Whether F -> w1(V+) is additive with w1(0) = 0, on all pairs of basis
/// vectors plus `random_pairs` seeded random pairs.
bool w1_is_norm_linear(const CoverCohomologyModel& model, std::uint64_t seed = 1, int random_pairs = 64);

}  // namespace split_spectral
