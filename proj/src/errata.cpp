#include "split_spectral/errata.hpp"

#include "split_spectral/degrees.hpp"

namespace split_spectral {
namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

std::vector<ErratumEntry> errata_ledger(std::optional<CurveParams> at) {
  std::vector<ErratumEntry> out;

  ErratumEntry deg_u{"deg_U",
                     "degree of U = L (x) pi^* K^{(2m-1)/2} on S",
                     "deg U = m(2m-1)(g-1)",
                     "deg U = 2m(2m-1)(g-1)",
                     "Euler characteristic under rho_* and the deg W derivation both need the adopted value; "
                     "deg pi^* K = 2m(2g-2)",
                     {}, {}, {}};

  ErratumEntry g_sbar{"g_Sbar",
                      "twice the genus of Sbar",
                      "2 g_Sbar = 2m(m-1)(g-1) + 2",
                      "2 g_Sbar = 2m(2m-1)(g-1) + 2",
                      "agrees with g_Sbar = (2m^2 - m)(g-1) + 1, Riemann-Hurwitz for rho and adjunction on Sbar",
                      {}, {}, {}};

  ErratumEntry residual{"residual_index",
                        "differentials left free once a_m is fixed",
                        "i = 1 .. 2m-2",
                        "i = 1 .. m-1 (both emitted)",
                        "the base has slots i = 1..m only; the printed range runs past it for m >= 2",
                        {}, {}, {}};

  if (at) {
    const CurveParams p = CurveParams::make(at->m, at->g);
    const CoverGeometry geo = build_geometry(p);
    deg_u.printed_value = std::to_string(deg_U(p.m, p.g, DegUConvention::printed));
    deg_u.adopted_value = std::to_string(deg_U(p.m, p.g, DegUConvention::adopted));
    deg_u.printed_passes_oracle = euler_pushforward_check(p.m, p.g, 0, DegUConvention::printed);

    const std::int64_t printed_2h = 2 * p.m * (p.m - 1) * (p.g - 1) + 2;
    g_sbar.printed_value = std::to_string(printed_2h);
    g_sbar.adopted_value = std::to_string(2 * geo.g_Sbar);
    g_sbar.printed_passes_oracle = 2 * geo.g_S - 2 == 2 * (printed_2h - 2) + geo.N;

    residual.printed_value = join(residual_base_dims(p, ResidualIndexing::printed_range));
    residual.adopted_value = join(residual_base_dims(p, ResidualIndexing::base_without_top));
  }

  out.push_back(std::move(deg_u));
  out.push_back(std::move(g_sbar));
  out.push_back(std::move(residual));
  return out;
}

}  // namespace split_spectral
