#include "split_spectral/components.hpp"

#include "split_spectral/cohomology.hpp"
#include "split_spectral/divisors.hpp"
#include "split_spectral/errors.hpp"

namespace split_spectral {
namespace {

constexpr const char* kMaybeSubdivides = "M = 0 may subdivide further; see gothen_count for m = 2";

void require_M(const CoverGeometry& geo, std::int64_t M) {
  if (M % 2 != 0) throw ValidationError("M must be even (got " + std::to_string(M) + ")");
  if (M < 0 || M > geo.N) {
    throw ValidationError("M must satisfy 0 <= M <= 4m(g-1) = " + std::to_string(geo.N) + " (got " +
                          std::to_string(M) + ")");
  }
}

ComponentDescriptor common(Group group, const CurveParams& p, std::int64_t M) {
  ComponentDescriptor d;
  d.group = group;
  d.m = p.m;
  d.g = p.g;
  d.M = M;
  d.sym_dim = M;
  d.bundle_rank = (4 * p.m - 1) * (p.g - 1) - M;
  d.bundle_rank_exact = 4 * p.m * (p.g - 1) - M > 2 * p.g - 2;
  d.residual_base_dims = residual_base_dims(p, ResidualIndexing::base_without_top);
  d.residual_base_dims_printed = residual_base_dims(p, ResidualIndexing::printed_range);
  if (!d.bundle_rank_exact) {
    d.annotations.push_back("bundle_rank is the Riemann-Roch value; deg K^{2m}(-D) <= 2g-2 here");
  }
  return d;
}

}  // namespace

std::string group_name(Group g) { return g == Group::SpReal ? "sp" : "so"; }

Group parse_group(const std::string& text) {
  if (text == "sp") return Group::SpReal;
  if (text == "so") return Group::SOSplit;
  throw ValidationError("group must be 'sp' or 'so' (got '" + text + "')");
}

ComponentDescriptor sp_component(std::int64_t m, std::int64_t g, std::int64_t M) {
  const CurveParams p = CurveParams::make(m, g);
  const CoverGeometry geo = build_geometry(p);
  require_M(geo, M);
  ComponentDescriptor d = common(Group::SpReal, p, M);
  d.fiber_z2_dim = 2 * geo.g_Sbar;
  d.fiber_count_per_point = binomial(geo.N, M) * pow2(2 * geo.g_Sbar);
  if (M == 0) {
    d.annotations.push_back("maximal Toledo invariant: cover of a vector space over a point");
    d.annotations.push_back(kMaybeSubdivides);
  }
  return d;
}

ComponentDescriptor so_component(std::int64_t m, std::int64_t g, std::int64_t M) {
  const CurveParams p = CurveParams::make(m, g);
  const CoverGeometry geo = build_geometry(p);
  require_M(geo, M);
  std::int64_t canonical = M;
  std::vector<std::string> notes;
  if (2 * M > geo.N) {
    canonical = geo.N - M;
    notes.push_back("M = " + std::to_string(M) + " identified with N - M = " + std::to_string(canonical));
  }
  ComponentDescriptor d = common(Group::SOSplit, p, canonical);
  d.annotations.insert(d.annotations.begin(), notes.begin(), notes.end());
  d.identified_partner = geo.N - canonical;
  d.fiber_z2_dim = 2 * geo.g_Sbar;
  d.fiber_count_per_point = count_classes_with_M(geo.N, canonical);
  d.annotations.push_back("parametrized up to H^1(Sbar, Z2), of dimension " + std::to_string(2 * geo.g_Sbar));
  if (2 * canonical == geo.N) d.annotations.push_back("midpoint: C(N, N/2) / 2 classes");
  if (canonical == 0) d.annotations.push_back(kMaybeSubdivides);
  return d;
}

GradingTable grade(Group group, std::int64_t m, std::int64_t g) {
  const CurveParams p = CurveParams::make(m, g);
  const CoverGeometry geo = build_geometry(p);
  GradingTable t;
  t.group = group;
  t.m = m;
  t.g = g;
  const std::int64_t top = group == Group::SpReal ? geo.N : geo.N / 2;
  for (std::int64_t M = 0; M <= top; M += 2) {
    t.rows.push_back(group == Group::SpReal ? sp_component(m, g, M) : so_component(m, g, M));
    t.total += t.rows.back().fiber_count_per_point;
  }
  t.prym2_size = pow2(geo.dim_prym2);
  if (group == Group::SpReal) {
    // Every even subdivisor appears, so D and its complement are both counted.
    t.expected_total = pow2(geo.N - 1) * pow2(2 * geo.g_Sbar);
    t.reconciles = t.total == t.expected_total && t.expected_total == 2 * t.prym2_size;
  } else {
    t.expected_total = pow2(geo.N - 2);
    t.reconciles = t.total == t.expected_total && t.total == pow2(geo.dim_so_fiber);
  }
  return t;
}

MaximalCase maximal_case(std::int64_t m, std::int64_t g) {
  const CurveParams p = CurveParams::make(m, g);
  const CoverGeometry geo = build_geometry(p);
  MaximalCase r;
  r.m = m;
  r.g = g;
  r.sp_cover_multiplicity = pow2(2 * geo.g_Sbar);
  r.m_odd = m % 2 != 0;
  r.degenerate = m == 1;
  r.prym_dim = geo.g_Sbar - g;
  if (r.degenerate) r.annotations.push_back("degenerate: Sbar = Sigma and Prym(Sbar, Sigma) is a point");
  if (r.m_odd) {
    r.copies = pow2(2 * g);
  } else {
    const SplitReport split = lemma_h_split(build_cover_model(p));
    r.filtration_dims.assign(split.dims.begin(), split.dims.end());
    r.annotations.push_back("m even: filtration rho^* H^1(Sigma) in ker Nm; no copy count asserted");
  }
  return r;
}

BigInt gothen_count(std::int64_t g) {
  if (g < 2) throw ValidationError("gothen_count: need g >= 2 (got " + std::to_string(g) + ")");
  return 3 * pow2(2 * g) + 2 * g - 4;
}

}  // namespace split_spectral
