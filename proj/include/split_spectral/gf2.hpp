#pragma once

/**
 * Exact linear algebra over the two-element field.
 *
 * Z2 is an Eigen scalar, so BitVector and BitMatrix are ordinary dense Eigen
 * objects and products, blocks and transposes work as usual. The elimination
 * routines below are written for any exact field scalar; every other module
 * instantiates them with Z2 only.
 *
 * Elimination uses the leftmost nonzero pivot and keeps the row order
 * deterministic, so derived bases (kernels, images) are reproducible.
 */

#include <Eigen/Core>

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "split_spectral/errors.hpp"

namespace split_spectral {

class Z2 {
 public:
  constexpr Z2() noexcept = default;

  /// Reduces an integer to its parity, so Z2(-1) == Z2(1).
  template <std::integral I>
  constexpr Z2(I n) noexcept : bit_(static_cast<std::uint8_t>(n & 1)) {}  // NOLINT

  constexpr int value() const noexcept { return bit_; }
  constexpr explicit operator bool() const noexcept { return bit_ != 0; }

  constexpr Z2& operator+=(Z2 o) noexcept { bit_ ^= o.bit_; return *this; }
  constexpr Z2& operator-=(Z2 o) noexcept { bit_ ^= o.bit_; return *this; }
  constexpr Z2& operator*=(Z2 o) noexcept { bit_ &= o.bit_; return *this; }
  constexpr Z2& operator/=(Z2 o) {
    if (!o.bit_) throw std::domain_error("division by zero in Z2");
    return *this;
  }

  friend constexpr Z2 operator+(Z2 a, Z2 b) noexcept { return a += b; }
  friend constexpr Z2 operator-(Z2 a, Z2 b) noexcept { return a -= b; }
  friend constexpr Z2 operator*(Z2 a, Z2 b) noexcept { return a *= b; }
  friend constexpr Z2 operator/(Z2 a, Z2 b) { return a /= b; }
  friend constexpr Z2 operator-(Z2 a) noexcept { return a; }

  friend constexpr bool operator==(Z2 a, Z2 b) noexcept { return a.bit_ == b.bit_; }

  friend std::ostream& operator<<(std::ostream& os, Z2 a) { return os << a.value(); }

 private:
  std::uint8_t bit_ = 0;
};

inline Z2 abs(Z2 a) noexcept { return a; }
inline Z2 abs2(Z2 a) noexcept { return a; }
inline Z2 conj(Z2 a) noexcept { return a; }
inline Z2 real(Z2 a) noexcept { return a; }

}  // namespace split_spectral

namespace Eigen {

template <>
struct NumTraits<split_spectral::Z2> : NumTraits<unsigned char> {
  using Real = split_spectral::Z2;
  using NonInteger = split_spectral::Z2;
  using Literal = split_spectral::Z2;
  using Nested = split_spectral::Z2;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(1); }
  static inline Real lowest() { return Real(0); }
};

}  // namespace Eigen

namespace split_spectral {

using Eigen::Index;

using BitVector = Eigen::Matrix<Z2, Eigen::Dynamic, 1>;
using BitMatrix = Eigen::Matrix<Z2, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

inline BitVector zero_vector(Index n) { return BitVector::Zero(n); }

inline BitVector basis_vector(Index n, Index i) {
  BitVector v = BitVector::Zero(n);
  v(i) = Z2(1);
  return v;
}

inline BitMatrix identity_matrix(Index n) { return BitMatrix::Identity(n, n); }

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& expr) {
  using Scalar = typename Derived::Scalar;
  const auto m = expr.eval();  // products must not be re-evaluated per coefficient
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!(m(i, j) == Scalar(0))) return false;
  return true;
}

template <typename DerivedA, typename DerivedB>
bool equal(const Eigen::MatrixBase<DerivedA>& lhs, const Eigen::MatrixBase<DerivedB>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
  const auto a = lhs.eval();
  const auto b = rhs.eval();
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// Number of nonzero coordinates.
template <typename Derived>
Index weight(const Eigen::MatrixBase<Derived>& expr) {
  const auto v = expr.eval();
  Index w = 0;
  for (Index i = 0; i < v.size(); ++i) w += v(i).value();
  return w;
}

/// Matrix-vector product with a shape check.
template <typename DerivedM, typename DerivedV>
BitVector apply(const Eigen::MatrixBase<DerivedM>& map, const Eigen::MatrixBase<DerivedV>& v) {
  if (map.cols() != v.size()) {
    throw DimensionMismatch("apply: map has " + std::to_string(map.cols()) +
                            " columns but vector has length " + std::to_string(v.size()));
  }
  return map * v;
}

/// outer * inner (inner applied first), with a shape check.
template <typename DerivedA, typename DerivedB>
BitMatrix compose(const Eigen::MatrixBase<DerivedA>& outer, const Eigen::MatrixBase<DerivedB>& inner) {
  if (outer.cols() != inner.rows()) {
    throw DimensionMismatch("compose: " + std::to_string(outer.rows()) + "x" +
                            std::to_string(outer.cols()) + " after " + std::to_string(inner.rows()) +
                            "x" + std::to_string(inner.cols()));
  }
  return outer * inner;
}

template <typename Scalar>
struct Echelon {
  DenseMatrix<Scalar> reduced;  // reduced row echelon form
  std::vector<Index> pivots;    // pivot column of each nonzero row, increasing

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination. Pivot = first nonzero entry at or below the
/// current row in the leftmost remaining column.
namespace detail {

// Z2 elimination on rows packed 64 entries per word.
template <typename Derived>
Echelon<Z2> packed_row_echelon(const Eigen::MatrixBase<Derived>& m) {
  const Index rows = m.rows(), cols = m.cols();
  const Index words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(rows * words), 0);
  auto row_ptr = [&](Index i) { return bits.data() + i * words; };
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      if (m(i, j).value()) row_ptr(i)[j / 64] |= std::uint64_t{1} << (j % 64);

  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    const Index w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    Index p = row;
    while (p < rows && !(row_ptr(p)[w] & bit)) ++p;
    if (p == rows) continue;
    if (p != row) std::swap_ranges(row_ptr(p), row_ptr(p) + words, row_ptr(row));
    const std::uint64_t* src = row_ptr(row);
    for (Index i = 0; i < rows; ++i) {
      if (i == row || !(row_ptr(i)[w] & bit)) continue;
      std::uint64_t* dst = row_ptr(i);
      for (Index k = w; k < words; ++k) dst[k] ^= src[k];
    }
    pivots.push_back(col);
    ++row;
  }
  DenseMatrix<Z2> reduced = DenseMatrix<Z2>::Zero(rows, cols);
  for (Index i = 0; i < row; ++i)
    for (Index j = 0; j < cols; ++j) reduced(i, j) = Z2((row_ptr(i)[j / 64] >> (j % 64)) & 1u);
  return {std::move(reduced), std::move(pivots)};
}

}  // namespace detail

template <typename Derived>
Echelon<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_same_v<Scalar, Z2>) return detail::packed_row_echelon(m);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> r = m;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Index p = row;
    while (p < r.rows() && r(p, col) == Scalar(0)) ++p;
    if (p == r.rows()) continue;
    if (p != row) r.row(p).swap(r.row(row));
    const Scalar inv = Scalar(1) / r(row, col);
    if (!(inv == Scalar(1))) r.row(row) *= inv;
    for (Index i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      const Scalar f = r(i, col);
      if (!(f == Scalar(0))) r.row(i) -= f * r.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return {DenseMatrix<Scalar>(r), std::move(pivots)};
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return reduced_row_echelon(m).rank();
}

/// Basis of the null space, one column per free column of the echelon form.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = reduced_row_echelon(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Zero(n, n - ech.rank());
  Index out = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, out) = Scalar(1);
    for (Index j = 0; j < ech.rank(); ++j) {
      basis(ech.pivots[static_cast<std::size_t>(j)], out) = -ech.reduced(j, f);
    }
    ++out;
  }
  return basis;
}

/// Basis of the column space: the pivot columns of m itself.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> image_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = reduced_row_echelon(m);
  DenseMatrix<Scalar> basis(m.rows(), ech.rank());
  for (Index j = 0; j < ech.rank(); ++j) basis.col(j) = m.col(ech.pivots[static_cast<std::size_t>(j)]);
  return basis;
}

template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> hcat(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hcat: row counts differ");
  DenseMatrix<typename DerivedA::Scalar> out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

/// Subspaces are given by spanning columns.
template <typename DerivedA, typename DerivedB>
bool span_contains(const Eigen::MatrixBase<DerivedA>& big, const Eigen::MatrixBase<DerivedB>& small) {
  return rank(hcat(big, small)) == rank(big);
}

template <typename DerivedA, typename DerivedB>
bool same_span(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  const Index ra = rank(a);
  return ra == rank(b) && rank(hcat(a, b)) == ra;
}

template <typename DerivedA, typename DerivedB>
Index intersection_dim(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return rank(a) + rank(b) - rank(hcat(a, b));
}

/// dim(span V / span W); W must lie inside V.
template <typename DerivedV, typename DerivedW>
Index quotient_dim(const Eigen::MatrixBase<DerivedV>& v, const Eigen::MatrixBase<DerivedW>& w) {
  if (!span_contains(v, w)) throw ValidationError("quotient_dim: W is not a subspace of V");
  return rank(v) - rank(w);
}

/**
 * Exactness verdicts for 0 -> V_0 -> V_1 -> ... -> V_k -> 0 built from k maps
 * (map i sends V_{i-1} to V_i, stored as rows(V_i) x cols(V_{i-1})).
 * junction_exact[j] refers to V_j; the ends encode injectivity of the first
 * map and surjectivity of the last.
 */
struct ExactSequenceCheck {
  std::vector<bool> junction_exact;
  std::vector<bool> composite_zero;  // map_{i+1} * map_i == 0, per interior junction

  bool exact_everywhere() const {
    for (bool b : junction_exact) if (!b) return false;
    return true;
  }
  bool interior_exact() const {
    for (std::size_t j = 1; j + 1 < junction_exact.size(); ++j) if (!junction_exact[j]) return false;
    return true;
  }
};

template <typename Scalar>
ExactSequenceCheck check_exact(const std::vector<DenseMatrix<Scalar>>& maps) {
  if (maps.empty()) throw ValidationError("check_exact: empty sequence");
  for (std::size_t i = 1; i < maps.size(); ++i) {
    if (maps[i].cols() != maps[i - 1].rows()) {
      throw DimensionMismatch("check_exact: map " + std::to_string(i) + " has " +
                              std::to_string(maps[i].cols()) + " columns, previous map has " +
                              std::to_string(maps[i - 1].rows()) + " rows");
    }
  }
  ExactSequenceCheck out;
  // V_0: kernel of the first map must be zero.
  out.junction_exact.push_back(rank(maps.front()) == maps.front().cols());
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    const auto& in = maps[i];
    const auto& next = maps[i + 1];
    const bool zero = is_zero(next * in);
    out.composite_zero.push_back(zero);
    // im(in) == ker(next): composite zero and dimensions agree.
    const Index dim_image = rank(in);
    const Index dim_kernel = next.cols() - rank(next);
    out.junction_exact.push_back(zero && dim_image == dim_kernel);
  }
  out.junction_exact.push_back(rank(maps.back()) == maps.back().rows());
  return out;
}

}  // namespace split_spectral
