#include "split_spectral/covers.hpp"

#include <numeric>
#include <string>

#include "split_spectral/errors.hpp"

namespace split_spectral {

CurveParams CurveParams::make(std::int64_t m, std::int64_t g) {
  if (m < 1) throw ValidationError("m must be >= 1 (got " + std::to_string(m) + ")");
  if (g < 2) throw ValidationError("g must be >= 2 (got " + std::to_string(g) + ")");
  return CurveParams{m, g};
}

CoverGeometry build_geometry(const CurveParams& p) {
  const std::int64_t m = p.m;
  const std::int64_t h = p.g - 1;
  CoverGeometry geo;
  geo.g_S = 1 + 4 * m * m * h;
  geo.g_Sbar = (2 * m * m - m) * h + 1;
  geo.N = 4 * m * h;
  geo.deg_K = 2 * p.g - 2;
  geo.dim_prym = geo.g_S - geo.g_Sbar;
  const auto base = hitchin_base_dims(p);
  geo.dim_hitchin_base = std::accumulate(base.begin(), base.end(), std::int64_t{0});
  geo.dim_prym2 = 2 * geo.g_Sbar + geo.N - 2;
  geo.dim_so_fiber = geo.N - 2;
  return geo;
}

bool riemann_hurwitz_check(const CoverGeometry& geo) {
  return 2 * geo.g_S - 2 == 2 * (2 * geo.g_Sbar - 2) + geo.N;
}

bool adjunction_check_S(const CurveParams& p, const CoverGeometry& geo) {
  return 2 * geo.g_S - 2 == 8 * p.m * p.m * (p.g - 1);
}

bool adjunction_check_Sbar(const CurveParams& p, const CoverGeometry& geo) {
  return 2 * geo.g_Sbar - 2 == p.m * (2 * p.m - 1) * (2 * p.g - 2);
}

std::int64_t canonical_power_sections(std::int64_t d, std::int64_t g) {
  if (d < 2) throw ValidationError("canonical_power_sections: needs d >= 2");
  return d * (2 * g - 2) - g + 1;
}

std::vector<std::int64_t> hitchin_base_dims(const CurveParams& p) {
  std::vector<std::int64_t> dims;
  for (std::int64_t i = 1; i <= p.m; ++i) dims.push_back((4 * i - 1) * (p.g - 1));
  return dims;
}

std::vector<std::int64_t> residual_base_dims(const CurveParams& p, ResidualIndexing indexing) {
  const std::int64_t top = indexing == ResidualIndexing::base_without_top ? p.m - 1 : 2 * p.m - 2;
  std::vector<std::int64_t> dims;
  for (std::int64_t i = 1; i <= top; ++i) dims.push_back((4 * i - 1) * (p.g - 1));
  return dims;
}

}  // namespace split_spectral
