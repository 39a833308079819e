#include "split_spectral/json_io.hpp"

#include "split_spectral/bitio.hpp"
#include "split_spectral/errors.hpp"

namespace split_spectral {

Json to_json(const BigInt& v) { return to_string(v); }

Json to_json(const BitVector& v) { return Json{{"hex", to_hex(v)}, {"len", v.size()}}; }

Json to_json(const CoverGeometry& geo) {
  return Json{{"g_S", geo.g_S},
              {"g_Sbar", geo.g_Sbar},
              {"N", geo.N},
              {"deg_K", geo.deg_K},
              {"dim_prym", geo.dim_prym},
              {"dim_hitchin_base", geo.dim_hitchin_base},
              {"dim_prym2", geo.dim_prym2},
              {"dim_so_fiber", geo.dim_so_fiber}};
}

Json to_json(const CoverCohomologyModel& model) {
  auto side = [](const SurfaceCohomology& c) {
    Json values = Json::array();
    for (Index i = 0; i < c.dim(); ++i) values.push_back(c.q(basis_vector(c.dim(), i)).value());
    return Json{{"genus", c.genus}, {"parity", c.parity().value()}, {"arf", arf(c.q).value()},
                {"q_basis", values}};
  };
  return Json{{"m", model.params().m},
              {"g", model.params().g},
              {"sigma", side(model.sigma())},
              {"sbar", side(model.sbar())},
              {"norm_rows", matrix_rows(model.norm_matrix())},
              {"pullback_rows", matrix_rows(model.pullback_matrix())}};
}

Json to_json(const SplitReport& r) {
  Json j{{"m_odd", r.m_odd}, {"holds", r.holds}, {"dims", r.dims}};
  if (r.m_odd) {
    j["zero_intersection"] = r.zero_intersection;
    j["section"] = r.section;
  } else {
    j["filtration"] = r.filtration;
  }
  j["violations"] = r.violations;
  return j;
}

Json to_json(const SoFiberReport& r) {
  return Json{{"dim_prym2", r.dim_prym2},       {"dim_quotient", r.dim_quotient},
              {"expected", r.expected},         {"copies", r.copies},
              {"points_per_copy", to_json(r.points_per_copy)}, {"holds", r.holds}};
}

Json to_json(const KOClass& c) { return Json{{"rank", c.rank()}, {"w1", to_json(c.w1())}, {"w2", c.w2().value()}}; }

Json to_json(const SWClasses& c) {
  return Json{{"w1_Vplus", to_json(c.w1_Vplus)},
              {"w2_Vplus", c.w2_Vplus.value()},
              {"w2_Vminus", c.w2_Vminus.value()},
              {"M", c.M}};
}

Json to_json(const DegreeProfile& p) {
  return Json{{"m", p.m},          {"g", p.g},           {"M", p.M},
              {"deg_U", p.deg_U},  {"deg_U_plus", p.deg_U_plus}, {"deg_U_minus", p.deg_U_minus},
              {"deg_W", p.deg_W},  {"toledo", p.toledo}};
}

Json to_json(const MilnorWood& mw) {
  return Json{{"toledo", mw.toledo}, {"within_bound", mw.within_bound}, {"c1_mod2", mw.c1_mod2}};
}

Json to_json(const ComponentDescriptor& d) {
  Json j{{"group", group_name(d.group)},
         {"m", d.m},
         {"g", d.g},
         {"M", d.M},
         {"sym_dim", d.sym_dim},
         {"bundle_rank", d.bundle_rank},
         {"bundle_rank_exact", d.bundle_rank_exact},
         {"residual_base_dims", Json{{"base_without_top", d.residual_base_dims},
                                     {"printed_range", d.residual_base_dims_printed}}},
         {"fiber_z2_dim", d.fiber_z2_dim},
         {"fiber_count_per_point", to_json(d.fiber_count_per_point)}};
  if (d.identified_partner >= 0) j["identified_partner"] = d.identified_partner;
  j["annotations"] = d.annotations;
  return j;
}

Json to_json(const GradingTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(to_json(r));
  return Json{{"group", group_name(t.group)},
              {"m", t.m},
              {"g", t.g},
              {"rows", rows},
              {"total", to_json(t.total)},
              {"expected_total", to_json(t.expected_total)},
              {"prym2_size", to_json(t.prym2_size)},
              {"reconciles", t.reconciles}};
}

Json to_json(const MaximalCase& r) {
  Json j{{"m", r.m},
         {"g", r.g},
         {"sp_cover_multiplicity", to_json(r.sp_cover_multiplicity)},
         {"m_odd", r.m_odd},
         {"degenerate", r.degenerate},
         {"prym_dim", r.prym_dim}};
  if (r.m_odd) j["copies"] = to_json(r.copies);
  else j["filtration_dims"] = r.filtration_dims;
  j["annotations"] = r.annotations;
  return j;
}

Json to_json(const GradedBundle& b) {
  return Json{{"exponents", b.labels()}, {"rank", b.rank()}, {"det_trivial", b.det_trivial()},
              {"negation_symmetric", b.negation_symmetric()}};
}

Json to_json(const HitchinChecks& c) {
  return Json{{"det_trivial", c.det_trivial},
              {"negation_symmetric", c.negation_symmetric},
              {"W_not_symmetric", c.W_not_symmetric},
              {"shift_union", c.shift_union},
              {"W_union_dual", c.W_union_dual},
              {"parity_ranks", c.parity_ranks},
              {"W_rank_match", c.W_rank_match},
              {"sl_twisted_match", c.sl_twisted_match},
              {"all", c.all()}};
}

Json to_json(const ErratumEntry& e) {
  Json j{{"id", e.id}, {"subject", e.subject}, {"printed", e.printed}, {"adopted", e.adopted},
         {"evidence", e.evidence}};
  if (e.printed_value) j["printed_value"] = *e.printed_value;
  if (e.adopted_value) j["adopted_value"] = *e.adopted_value;
  if (e.printed_passes_oracle) j["printed_passes_oracle"] = *e.printed_passes_oracle;
  return j;
}

Json to_json(const std::vector<ErratumEntry>& ledger) {
  Json j = Json::array();
  for (const auto& e : ledger) j.push_back(to_json(e));
  return j;
}

BitVector bitvector_from_json(const Json& j) {
  if (j.is_string()) return parse_bitvector(j.get<std::string>());
  if (j.is_object() && j.contains("hex") && j.contains("len") && j["hex"].is_string() &&
      j["len"].is_number_integer()) {
    return parse_hex(j["hex"].get<std::string>(), j["len"].get<Index>());
  }
  throw ValidationError("expected a bit vector as \"0x..:len\", a bit string or {\"hex\", \"len\"}");
}

}  // namespace split_spectral
