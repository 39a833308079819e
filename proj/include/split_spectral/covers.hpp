#pragma once

// Numerical profile of the spectral tower
//
//        rho (2:1)
//    S ------------> Sbar
//     \              /
//  pi  \ (2m:1)     / pibar (m:1)
//       \--> Sigma <-
//
// for a base curve of genus g and rank parameter m.

#include <cstdint>
#include <vector>

namespace split_spectral {

struct CurveParams {
  std::int64_t m = 1;
  std::int64_t g = 2;

  /// Throws ValidationError unless m >= 1 and g >= 2.
  static CurveParams make(std::int64_t m, std::int64_t g);
};

struct CoverGeometry {
  std::int64_t g_S = 0;
  std::int64_t g_Sbar = 0;
  std::int64_t N = 0;       // number of ramification points, deg a_m = 4m(g-1)
  std::int64_t deg_K = 0;   // 2g - 2
  std::int64_t dim_prym = 0;
  std::int64_t dim_hitchin_base = 0;
  std::int64_t dim_prym2 = 0;     // GF(2) dimension of Prym(S, Sbar)[2]
  std::int64_t dim_so_fiber = 0;  // GF(2) dimension of Prym[2] / rho^* H^1(Sbar)
};

CoverGeometry build_geometry(const CurveParams& p);

/// 2 g_S - 2 == 2 (2 g_Sbar - 2) + N for the double cover branched at the N
/// fixed points of the involution.
bool riemann_hurwitz_check(const CoverGeometry& geo);

/// 2 g_S - 2 == deg pi^* K^{2m} == 8 m^2 (g - 1).
bool adjunction_check_S(const CurveParams& p, const CoverGeometry& geo);
/// 2 g_Sbar - 2 == deg pibar^* K^{2m-1} == m (2m - 1)(2g - 2).
bool adjunction_check_Sbar(const CurveParams& p, const CoverGeometry& geo);

/// dim H^0(Sigma, K^{2i}) for i = 1..m, each (4i - 1)(g - 1).
std::vector<std::int64_t> hitchin_base_dims(const CurveParams& p);

/// dim H^0(Sigma, K^d) for d >= 2 by Riemann-Roch: d(2g - 2) - g + 1.
std::int64_t canonical_power_sections(std::int64_t d, std::int64_t g);

enum class ResidualIndexing {
  base_without_top,  // i = 1 .. m-1: the base minus the a_m slot
  printed_range,     // i = 1 .. 2m-2, as printed in the component theorems
};

/// Dimensions of the differentials still free once a_m is fixed.
std::vector<std::int64_t> residual_base_dims(const CurveParams& p, ResidualIndexing indexing);

}  // namespace split_spectral
