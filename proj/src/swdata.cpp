#include "split_spectral/swdata.hpp"

#include <random>
#include <string>

namespace split_spectral {
namespace {

void check_datum(const SpectralDatum& d, const CoverCohomologyModel& model) {
  if (d.F.size() != model.sbar().dim()) {
    throw DimensionMismatch("spectral datum: F has length " + std::to_string(d.F.size()) + ", expected 2 g_Sbar = " +
                            std::to_string(model.sbar().dim()));
  }
  const std::int64_t N = build_geometry(model.params()).N;
  if (d.D.N() != N) {
    throw DimensionMismatch("spectral datum: D lives on " + std::to_string(d.D.N()) + " points, expected N = " +
                            std::to_string(N));
  }
}

}  // namespace

SWClasses sw_classes(const SpectralDatum& d, const CoverCohomologyModel& model) {
  check_datum(d, model);
  SWClasses out;
  out.w1_Vplus = model.norm(d.F);
  out.w2_Vplus = model.sbar().q(d.F) + model.sigma().q(out.w1_Vplus);
  out.w2_Vminus = out.w2_Vplus + d.w2_total;
  out.M = d.D.M();
  return out;
}

SWClasses sw_classes_corollary(const SpectralDatum& d, const CoverCohomologyModel& model) {
  check_datum(d, model);
  const BitVector nm = model.norm(d.F);
  const Z2 phi_twisted = model.sbar().q(d.F);  // index of F (x) K_Sbar^{1/2}
  const Z2 phi_nm = model.sigma().q(nm);
  const Z2 phi_V = d.w2_total;

  SWClasses out;
  out.w1_Vplus = nm;
  out.w2_Vplus = phi_twisted.value() == 0 ? phi_nm : Z2(1) + phi_nm;
  out.w2_Vminus = phi_twisted == phi_V ? phi_nm : Z2(1) + phi_nm;
  out.M = d.D.M();
  return out;
}

bool w1_is_norm_linear(const CoverCohomologyModel& model, std::uint64_t seed, int random_pairs) {
  const Index n = model.sbar().dim();
  const auto w1 = [&](const BitVector& F) { return model.norm(F); };
  if (!is_zero(w1(zero_vector(n)))) return false;
  for (Index i = 0; i < n; ++i) {
    const BitVector ei = basis_vector(n, i);
    for (Index j = i + 1; j < n; ++j) {
      const BitVector ej = basis_vector(n, j);
      if (!equal(w1(ei + ej), w1(ei) + w1(ej))) return false;
    }
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < random_pairs; ++t) {
    BitVector a(n), b(n);
    for (Index i = 0; i < n; ++i) {
      a(i) = Z2(coin(rng));
      b(i) = Z2(coin(rng));
    }
    if (!equal(w1(a + b), w1(a) + w1(b))) return false;
  }
  return true;
}

}  // namespace split_spectral
