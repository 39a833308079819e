#pragma once

// Degree bookkeeping on the symplectic side for invariant M:
//   deg U   = 2m(2m-1)(g-1)                 (U = L (x) pi^* K^{(2m-1)/2} on S)
//   deg U+  = m(2m-1)(g-1) - M/2
//   deg U-  = m(2m-3)(g-1) + M/2
//   deg W   = m(g-1) - M/2 = Toledo invariant

#include <cstdint>

namespace split_spectral {

struct DegreeProfile {
  std::int64_t m = 0;
  std::int64_t g = 0;
  std::int64_t M = 0;
  std::int64_t deg_U = 0;
  std::int64_t deg_U_plus = 0;
  std::int64_t deg_U_minus = 0;
  std::int64_t deg_W = 0;
  std::int64_t toledo = 0;
};

enum class DegUConvention {
  adopted,  // 2m(2m-1)(g-1)
  printed,  // m(2m-1)(g-1), the misprinted value
};

std::int64_t deg_U(std::int64_t m, std::int64_t g, DegUConvention convention = DegUConvention::adopted);

/// Throws ValidationError unless M is even and 0 <= M <= 4m(g-1).
DegreeProfile degree_profile(std::int64_t m, std::int64_t g, std::int64_t M);

/// deg U+ + deg U- == deg U - (g_S - 1) + 2(g_Sbar - 1): Euler characteristic
/// is preserved by rho_*. Holds for the adopted deg U, never for the printed one.
bool euler_pushforward_check(std::int64_t m, std::int64_t g, std::int64_t M,
                             DegUConvention convention = DegUConvention::adopted);

/// deg U- - deg U+ == deg O(D) (x) pibar^* K^* == M - 2m(g-1).
bool lemma_u_degree_check(std::int64_t m, std::int64_t g, std::int64_t M);

/// deg W through deg U / 2 - M / 2 - (2m^2 - 2m)(g - 1).
std::int64_t deg_W_via_U(std::int64_t m, std::int64_t g, std::int64_t M);

struct MilnorWood {
  std::int64_t toledo = 0;
  bool within_bound = false;  // |toledo| <= m(g-1)
  int c1_mod2 = 0;
};

/// Accepts any even M, including out-of-range values.
MilnorWood milnor_wood(std::int64_t m, std::int64_t g, std::int64_t M);

}  // namespace split_spectral
