#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "split_spectral/errors.hpp"

namespace split_spectral {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(std::int64_t e) {
  if (e < 0) throw ValidationError("pow2: negative exponent");
  BigInt out = 1;
  out <<= static_cast<unsigned>(e);
  return out;
}

/// Exact binomial coefficient; zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: out is C(n-k+i, i) here
  }
  return out;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace split_spectral
