#include "split_spectral/hitchin.hpp"

#include <algorithm>
#include <numeric>

#include "split_spectral/errors.hpp"

namespace split_spectral {
namespace {

void require_m(std::int64_t m) {
  if (m < 1) throw ValidationError("m must be >= 1 (got " + std::to_string(m) + ")");
}

GradedBundle filter_parity(const GradedBundle& b, bool even) {
  std::vector<std::int64_t> out;
  for (const auto d : b.doubled()) {
    if (d % 2 != 0) throw ValidationError("parity split needs integer exponents");
    if (((d / 2) % 2 == 0) == even) out.push_back(d);
  }
  return GradedBundle(std::move(out));
}

GradedBundle W_by_index_parity(std::int64_t m, bool odd_i) {
  require_m(m);
  std::vector<std::int64_t> d;
  for (std::int64_t i = m + 1; i <= 2 * m; ++i) {
    if ((i % 2 != 0) == odd_i) d.push_back(2 * (i - m) - 1);
  }
  return GradedBundle(std::move(d));
}

}  // namespace

GradedBundle::GradedBundle(std::vector<std::int64_t> doubled_exponents, std::int64_t doubled_twist)
    : doubled_(std::move(doubled_exponents)), twist_(doubled_twist) {
  std::sort(doubled_.begin(), doubled_.end());
}

GradedBundle GradedBundle::from_integers(const std::vector<std::int64_t>& exponents) {
  std::vector<std::int64_t> d;
  d.reserve(exponents.size());
  for (const auto e : exponents) d.push_back(2 * e);
  return GradedBundle(std::move(d));
}

std::int64_t GradedBundle::degree(std::int64_t g) const {
  const std::int64_t sum = std::accumulate(doubled_.begin(), doubled_.end(), std::int64_t{0});
  // (2g - 2) * sum / 2
  return (g - 1) * sum;
}

bool GradedBundle::det_trivial() const {
  return std::accumulate(doubled_.begin(), doubled_.end(), std::int64_t{0}) == 0;
}

bool GradedBundle::negation_symmetric() const { return dual() == *this; }

GradedBundle GradedBundle::tensor_power_of_K(std::int64_t doubled_shift) const {
  std::vector<std::int64_t> d = doubled_;
  for (auto& x : d) x += doubled_shift;
  return GradedBundle(std::move(d), twist_ + doubled_shift);
}

GradedBundle GradedBundle::dual() const {
  std::vector<std::int64_t> d = doubled_;
  for (auto& x : d) x = -x;
  return GradedBundle(std::move(d), -twist_);
}

GradedBundle GradedBundle::unite(const GradedBundle& other) const {
  std::vector<std::int64_t> d = doubled_;
  d.insert(d.end(), other.doubled_.begin(), other.doubled_.end());
  return GradedBundle(std::move(d), twist_);
}

std::vector<std::string> GradedBundle::labels() const {
  std::vector<std::string> out;
  out.reserve(doubled_.size());
  for (const auto d : doubled_) out.push_back(half_integer_label(d));
  return out;
}

std::string half_integer_label(std::int64_t doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

GradedBundle sp_hitchin_E(std::int64_t m) {
  require_m(m);
  std::vector<std::int64_t> d;
  for (std::int64_t i = 1; i <= 2 * m; ++i) d.push_back(2 * (-m + i) - 1);
  return GradedBundle(std::move(d));
}

GradedBundle so_hitchin_V(std::int64_t m) {
  require_m(m);
  std::vector<std::int64_t> e;
  for (std::int64_t i = 0; i <= 2 * m; ++i) e.push_back(-m + i);
  return GradedBundle::from_integers(e);
}

GradedBundle sp_hitchin_W(std::int64_t m) {
  require_m(m);
  std::vector<std::int64_t> d;
  for (std::int64_t i = m + 1; i <= 2 * m; ++i) d.push_back(2 * (-m + i) - 1);
  return GradedBundle(std::move(d));
}

GradedBundle sp_hitchin_W_odd_i(std::int64_t m) { return W_by_index_parity(m, true); }
GradedBundle sp_hitchin_W_even_i(std::int64_t m) { return W_by_index_parity(m, false); }

GradedBundle sl_twisted_hitchin(std::int64_t m) {
  require_m(m);
  std::vector<std::int64_t> e;
  for (std::int64_t i = 0; i <= m - 1; ++i) e.push_back(-m + 1 + 2 * i);
  return GradedBundle::from_integers(e);
}

ParitySplit parity_split_V(std::int64_t m) {
  const GradedBundle V = so_hitchin_V(m);
  return ParitySplit{filter_parity(V, true), filter_parity(V, false)};
}

HitchinChecks hitchin_checks(std::int64_t m) {
  const GradedBundle E = sp_hitchin_E(m);
  const GradedBundle V = so_hitchin_V(m);
  const GradedBundle W = sp_hitchin_W(m);
  const ParitySplit split = parity_split_V(m);
  const bool m_even = m % 2 == 0;

  HitchinChecks c;
  c.det_trivial = E.det_trivial() && V.det_trivial();
  c.negation_symmetric = E.negation_symmetric() && V.negation_symmetric() &&
                         split.V_even.negation_symmetric() && split.V_odd.negation_symmetric();
  c.W_not_symmetric = !W.negation_symmetric();
  c.shift_union = E.tensor_power_of_K(-1).unite(GradedBundle::from_integers({m})) == V;
  c.W_union_dual = W.unite(W.dual()) == E;
  c.parity_ranks = m_even ? (split.V_even.rank() == m + 1 && split.V_odd.rank() == m)
                          : (split.V_even.rank() == m && split.V_odd.rank() == m + 1);
  // Only ranks are compared: the exponents agree after a K^{1/2} twist that
  // the local description leaves implicit.
  const std::int64_t w_minus = sp_hitchin_W_odd_i(m).rank();
  const std::int64_t w_plus = sp_hitchin_W_even_i(m).rank();
  const std::int64_t even_paired = split.V_even.rank() - 1;  // K^0 is unpaired
  c.W_rank_match = m_even ? (split.V_odd.rank() == 2 * w_minus && even_paired == 2 * w_plus)
                          : (split.V_odd.rank() == 2 * w_plus && even_paired == 2 * w_minus);
  c.sl_twisted_match = sl_twisted_hitchin(m) == split.rank_m_part(m);
  return c;
}

}  // namespace split_spectral
