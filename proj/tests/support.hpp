#pragma once

// Oracles that share no code with the library: bit masks and brute force.

#include <cstdint>
#include <vector>

#include "split_spectral/gf2.hpp"

namespace oracle {

using split_spectral::BitMatrix;
using split_spectral::BitVector;
using split_spectral::Index;
using split_spectral::Z2;

// splitmix64
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline BitVector from_mask(std::uint64_t mask, Index n) {
  BitVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Z2((mask >> i) & 1u);
  return v;
}

inline std::uint64_t to_mask(const BitVector& v) {
  std::uint64_t m = 0;
  for (Index i = 0; i < v.size(); ++i) if (v(i).value()) m |= 1ull << i;
  return m;
}

inline BitMatrix random_matrix(Rng& rng, Index rows, Index cols) {
  BitMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Z2(static_cast<int>(rng.next() & 1u));
  return m;
}

inline BitVector random_vector(Rng& rng, Index n) {
  BitVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Z2(static_cast<int>(rng.next() & 1u));
  return v;
}

// Rank through an xor basis of column masks.
inline Index mask_rank(const BitMatrix& m) {
  std::vector<std::uint64_t> basis(64, 0);
  Index r = 0;
  for (Index j = 0; j < m.cols(); ++j) {
    std::uint64_t x = 0;
    for (Index i = 0; i < m.rows(); ++i) if (m(i, j).value()) x |= 1ull << i;
    for (int b = 63; b >= 0 && x; --b) {
      if (!((x >> b) & 1u)) continue;
      if (!basis[b]) { basis[b] = x; ++r; x = 0; break; }
      x ^= basis[b];
    }
  }
  return r;
}

// Number of x with m x = 0, by exhaustion; cols <= 16.
inline std::uint64_t kernel_size(const BitMatrix& m) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < (1ull << m.cols()); ++x) {
    bool zero = true;
    for (Index i = 0; i < m.rows() && zero; ++i) {
      int s = 0;
      for (Index j = 0; j < m.cols(); ++j) s ^= m(i, j).value() & static_cast<int>((x >> j) & 1u);
      zero = s == 0;
    }
    count += zero;
  }
  return count;
}

// Standard form pairing on interleaved coordinates, on masks.
inline int std_pairing(std::uint64_t x, std::uint64_t y, int genus) {
  int s = 0;
  for (int k = 0; k < genus; ++k) {
    const int xa = (x >> (2 * k)) & 1, xb = (x >> (2 * k + 1)) & 1;
    const int ya = (y >> (2 * k)) & 1, yb = (y >> (2 * k + 1)) & 1;
    s ^= (xa & yb) ^ (xb & ya);
  }
  return s;
}

inline std::uint64_t pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    t[i].assign(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[n][k];
}

}  // namespace oracle
