#pragma once

// Component descriptors on the regular locus of the Hitchin fibration.
//
// For invariant M the Sp(2m, R) side is a fibration of a Z2-vector space of
// dimension 2 g_Sbar over the total space of a rank (4m-1)(g-1) - M bundle on
// S^M Sigma. The SO(m, m+1) side is a covering of a vector space over S^M Sigma,
// defined up to H^1(Sbar, Z2). Connectivity over the discriminant locus is not
// computed.

#include <cstdint>
#include <string>
#include <vector>

#include "split_spectral/bigint.hpp"
#include "split_spectral/covers.hpp"

namespace split_spectral {

enum class Group { SpReal, SOSplit };

std::string group_name(Group g);
/// Accepts "sp" and "so"; throws ValidationError otherwise.
Group parse_group(const std::string& text);

struct ComponentDescriptor {
  Group group = Group::SpReal;
  std::int64_t m = 0;
  std::int64_t g = 0;
  std::int64_t M = 0;
  std::int64_t sym_dim = 0;
  // Riemann-Roch value for H^0(K^{2m}(-D)); exact once 4m(g-1) - M > 2g - 2.
  std::int64_t bundle_rank = 0;
  bool bundle_rank_exact = false;
  std::vector<std::int64_t> residual_base_dims;          // i = 1..m-1
  std::vector<std::int64_t> residual_base_dims_printed;  // i = 1..2m-2
  std::int64_t fiber_z2_dim = 0;
  BigInt fiber_count_per_point = 0;
  std::int64_t identified_partner = -1;  // N - M for SOSplit, -1 if none
  std::vector<std::string> annotations;
};

/// M even with 0 <= M <= N. M = 0 is accepted with an annotation.
ComponentDescriptor sp_component(std::int64_t m, std::int64_t g, std::int64_t M);

/// M even with 0 <= M <= N. M > N/2 is replaced by the class partner N - M.
ComponentDescriptor so_component(std::int64_t m, std::int64_t g, std::int64_t M);

struct GradingTable {
  Group group = Group::SpReal;
  std::int64_t m = 0;
  std::int64_t g = 0;
  std::vector<ComponentDescriptor> rows;
  BigInt total = 0;             // sum of per-point counts over rows
  BigInt expected_total = 0;    // SpReal: 2^{N-1} 2^{2h}; SOSplit: 2^{N-2} per copy
  BigInt prym2_size = 0;        // |Prym(S, Sbar)[2]| = 2^{dim_prym2}
  bool reconciles = false;
};

GradingTable grade(Group group, std::int64_t m, std::int64_t g);

struct MaximalCase {
  std::int64_t m = 0;
  std::int64_t g = 0;
  BigInt sp_cover_multiplicity = 0;  // 2^{2 g_Sbar}
  bool m_odd = false;
  bool degenerate = false;           // m = 1: Sbar = Sigma
  BigInt copies = 0;                 // 2^{2g}, m odd only
  std::int64_t prym_dim = 0;         // g_Sbar - g
  std::vector<std::int64_t> filtration_dims;  // m even only
  std::vector<std::string> annotations;
};

MaximalCase maximal_case(std::int64_t m, std::int64_t g);

/// 3 * 2^{2g} + 2g - 4: reference count of connected components of the
/// Sp(4, R) moduli space at maximal Toledo invariant. Not derived here.
BigInt gothen_count(std::int64_t g);

}  // namespace split_spectral
