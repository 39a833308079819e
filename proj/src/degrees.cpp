#include "split_spectral/degrees.hpp"

#include <cstdlib>
#include <string>

#include "split_spectral/covers.hpp"
#include "split_spectral/errors.hpp"

namespace split_spectral {
namespace {

void require_profile_range(std::int64_t m, std::int64_t g, std::int64_t M) {
  CurveParams::make(m, g);
  if (M % 2 != 0) throw ValidationError("M must be even (got " + std::to_string(M) + ")");
  const std::int64_t N = 4 * m * (g - 1);
  if (M < 0 || M > N) {
    throw ValidationError("M must satisfy 0 <= M <= 4m(g-1) = " + std::to_string(N) + " (got " +
                          std::to_string(M) + ")");
  }
}

}  // namespace

std::int64_t deg_U(std::int64_t m, std::int64_t g, DegUConvention convention) {
  const std::int64_t base = m * (2 * m - 1) * (g - 1);
  return convention == DegUConvention::adopted ? 2 * base : base;
}

DegreeProfile degree_profile(std::int64_t m, std::int64_t g, std::int64_t M) {
  require_profile_range(m, g, M);
  DegreeProfile p;
  p.m = m;
  p.g = g;
  p.M = M;
  p.deg_U = deg_U(m, g);
  p.deg_U_plus = m * (2 * m - 1) * (g - 1) - M / 2;
  p.deg_U_minus = m * (2 * m - 3) * (g - 1) + M / 2;
  p.deg_W = -M / 2 + m * (g - 1);
  p.toledo = p.deg_W;
  return p;
}

bool euler_pushforward_check(std::int64_t m, std::int64_t g, std::int64_t M, DegUConvention convention) {
  const DegreeProfile p = degree_profile(m, g, M);
  const CoverGeometry geo = build_geometry(CurveParams::make(m, g));
  return p.deg_U_plus + p.deg_U_minus == deg_U(m, g, convention) - (geo.g_S - 1) + 2 * (geo.g_Sbar - 1);
}

bool lemma_u_degree_check(std::int64_t m, std::int64_t g, std::int64_t M) {
  const DegreeProfile p = degree_profile(m, g, M);
  const std::int64_t deg_pullback_K = 2 * m * (g - 1);
  return p.deg_U_minus - p.deg_U_plus == M - deg_pullback_K;
}

std::int64_t deg_W_via_U(std::int64_t m, std::int64_t g, std::int64_t M) {
  require_profile_range(m, g, M);
  return deg_U(m, g) / 2 - M / 2 - (2 * m * m - 2 * m) * (g - 1);
}

MilnorWood milnor_wood(std::int64_t m, std::int64_t g, std::int64_t M) {
  CurveParams::make(m, g);
  if (M % 2 != 0) throw ValidationError("M must be even (got " + std::to_string(M) + ")");
  MilnorWood out;
  out.toledo = m * (g - 1) - M / 2;
  out.within_bound = std::llabs(out.toledo) <= m * (g - 1);
  out.c1_mod2 = static_cast<int>(((out.toledo % 2) + 2) % 2);
  return out;
}

}  // namespace split_spectral
