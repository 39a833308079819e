#pragma once

// Graded bundles on the Hitchin components as multisets of powers of K.
// Exponents are half-integers stored doubled: K^{3/2} is kept as 3.

#include <cstdint>
#include <string>
#include <vector>

namespace split_spectral {

class GradedBundle {
 public:
  GradedBundle() = default;
  /// Doubled exponents; kept sorted.
  explicit GradedBundle(std::vector<std::int64_t> doubled_exponents, std::int64_t doubled_twist = 0);

  static GradedBundle from_integers(const std::vector<std::int64_t>& exponents);

  const std::vector<std::int64_t>& doubled() const { return doubled_; }
  std::int64_t doubled_twist() const { return twist_; }
  std::int64_t rank() const { return static_cast<std::int64_t>(doubled_.size()); }

  /// (2g - 2) times the exponent sum.
  std::int64_t degree(std::int64_t g) const;
  bool det_trivial() const;
  bool negation_symmetric() const;

  GradedBundle tensor_power_of_K(std::int64_t doubled_shift) const;
  GradedBundle dual() const;
  GradedBundle unite(const GradedBundle& other) const;

  /// "-3/2", "0", "2".
  std::vector<std::string> labels() const;

  friend bool operator==(const GradedBundle& a, const GradedBundle& b) { return a.doubled_ == b.doubled_; }

 private:
  std::vector<std::int64_t> doubled_;
  std::int64_t twist_ = 0;
};

std::string half_integer_label(std::int64_t doubled);

/// E = sum_{i=1}^{2m} K^{-m+i-1/2}.
GradedBundle sp_hitchin_E(std::int64_t m);
/// V = sum_{i=0}^{2m} K^{-m+i}.
GradedBundle so_hitchin_V(std::int64_t m);
/// W = sum_{i=m+1}^{2m} K^{-m+i-1/2}.
GradedBundle sp_hitchin_W(std::int64_t m);
/// The summands of W with i odd (W-) and i even (W+).
GradedBundle sp_hitchin_W_odd_i(std::int64_t m);
GradedBundle sp_hitchin_W_even_i(std::int64_t m);
/// sum_{i=0}^{m-1} K^{-m+1+2i}, the K^2-twisted SL(m, R) bundle.
GradedBundle sl_twisted_hitchin(std::int64_t m);

struct ParitySplit {
  GradedBundle V_even;  // V+ (in the labeling where V+ carries even exponents)
  GradedBundle V_odd;   // V-
  // Rank m part: V_odd for m even, V_even for m odd.
  const GradedBundle& rank_m_part(std::int64_t m) const { return m % 2 == 0 ? V_odd : V_even; }
};

ParitySplit parity_split_V(std::int64_t m);

struct HitchinChecks {
  bool det_trivial = false;           // E, V
  bool negation_symmetric = false;    // E, V, V_even, V_odd
  bool W_not_symmetric = false;
  bool shift_union = false;           // V = E (x) K^{-1/2} + K^m
  bool W_union_dual = false;          // W + W* = E
  bool parity_ranks = false;          // (m+1, m) for m even, (m, m+1) for m odd
  bool W_rank_match = false;          // rank-level V+- = W+- + W+-*; exponent 0 unpaired
  bool sl_twisted_match = false;
  bool all() const {
    return det_trivial && negation_symmetric && W_not_symmetric && shift_union && W_union_dual &&
           parity_ranks && W_rank_match && sl_twisted_match;
  }
};

HitchinChecks hitchin_checks(std::int64_t m);

}  // namespace split_spectral
