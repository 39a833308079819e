#include "split_spectral/symplectic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace split_spectral {

SymplecticForm::SymplecticForm(BitMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw ValidationError("symplectic form: matrix is not square");
  if (matrix_.rows() % 2 != 0) throw ValidationError("symplectic form: odd dimension");
  for (Index i = 0; i < matrix_.rows(); ++i) {
    if (matrix_(i, i).value()) throw ValidationError("symplectic form: nonzero diagonal");
    for (Index j = i + 1; j < matrix_.cols(); ++j) {
      if (!(matrix_(i, j) == matrix_(j, i))) throw ValidationError("symplectic form: not symmetric");
    }
  }
  if (rank(matrix_) != matrix_.rows()) {
    throw DegenerateForm("symplectic form: degenerate (rank " + std::to_string(rank(matrix_)) + " < " +
                         std::to_string(matrix_.rows()) + ")");
  }
}

SymplecticForm SymplecticForm::standard(Index genus) {
  if (genus < 0) throw ValidationError("standard form: negative genus");
  BitMatrix m = BitMatrix::Zero(2 * genus, 2 * genus);
  for (Index k = 0; k < genus; ++k) {
    m(2 * k, 2 * k + 1) = Z2(1);
    m(2 * k + 1, 2 * k) = Z2(1);
  }
  return SymplecticForm(std::move(m));
}

Z2 SymplecticForm::pairing(const BitVector& x, const BitVector& y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw DimensionMismatch("pairing: vectors of length " + std::to_string(x.size()) + ", " +
                            std::to_string(y.size()) + " on a form of dimension " + std::to_string(dim()));
  }
  return (x.transpose() * matrix_ * y)(0, 0);
}

BitMatrix SymplecticForm::symplectic_basis() const {
  // Vectors are packed 64 coordinates per word; (x, y) = parity of x & (Omega y).
  using Packed = std::vector<std::uint64_t>;
  const Index n = dim();
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  std::vector<Packed> form_rows(static_cast<std::size_t>(n), Packed(words, 0));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (matrix_(i, j).value()) form_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j / 64)] |= 1ull << (j % 64);
  const auto apply_form = [&](const Packed& v) {
    Packed out(words, 0);
    for (Index i = 0; i < n; ++i) {
      if (!((v[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1u)) continue;
      const Packed& r = form_rows[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < words; ++k) out[k] ^= r[k];
    }
    return out;
  };
  const auto dot = [&](const Packed& a, const Packed& b) {
    int parity = 0;
    for (std::size_t k = 0; k < words; ++k) parity ^= std::popcount(a[k] & b[k]) & 1;
    return parity != 0;
  };
  const auto nonzero = [](const Packed& v) {
    return std::any_of(v.begin(), v.end(), [](std::uint64_t w) { return w != 0; });
  };

  std::vector<Packed> pool;
  pool.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    Packed e(words, 0);
    e[static_cast<std::size_t>(i / 64)] = 1ull << (i % 64);
    pool.push_back(std::move(e));
  }

  BitMatrix basis(n, n);
  Index filled = 0;
  const auto store = [&](const Packed& v) {
    for (Index i = 0; i < n; ++i) basis(i, filled) = Z2((v[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1u);
    ++filled;
  };
  std::size_t head = 0;
  while (head < pool.size()) {
    Packed a = std::move(pool[head++]);
    if (!nonzero(a)) continue;
    const Packed oa = apply_form(a);
    std::size_t partner = pool.size();
    for (std::size_t k = head; k < pool.size(); ++k) {
      if (dot(pool[k], oa)) { partner = k; break; }
    }
    if (partner == pool.size()) throw DegenerateForm("symplectic basis: vector without a dual partner");
    Packed b = std::move(pool[partner]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    const Packed ob = apply_form(b);
    // Project the rest onto the complement of span(a, b).
    for (std::size_t k = head; k < pool.size(); ++k) {
      Packed& v = pool[k];
      const bool with_b = dot(v, ob), with_a = dot(v, oa);
      for (std::size_t w = 0; w < words; ++w) v[w] ^= (with_b ? a[w] : 0) ^ (with_a ? b[w] : 0);
    }
    store(a);
    store(b);
  }
  if (filled != dim()) throw DegenerateForm("symplectic basis: incomplete");
  return basis;
}

QuadraticRefinement::QuadraticRefinement(SymplecticForm form, BitVector values, Z2 base_parity)
    : form_(std::move(form)), values_(std::move(values)), base_(base_parity) {
  if (values_.size() != form_.dim()) {
    throw DimensionMismatch("quadratic refinement: " + std::to_string(values_.size()) +
                            " basis values for a form of dimension " + std::to_string(form_.dim()));
  }
  upper_ = form_.matrix().triangularView<Eigen::StrictlyUpper>();
  linear_ = values_;
  for (Index i = 0; i < linear_.size(); ++i) linear_(i) += base_;
}

Z2 QuadraticRefinement::operator()(const BitVector& x) const {
  if (x.size() != dim()) {
    throw DimensionMismatch("quadratic refinement: vector of length " + std::to_string(x.size()) +
                            " on dimension " + std::to_string(dim()));
  }
  return base_ + linear_.dot(x) + (x.transpose() * upper_ * x)(0, 0);
}

QuadraticRefinement QuadraticRefinement::precompose(const BitMatrix& change) const {
  if (change.rows() != dim() || change.cols() != dim()) {
    throw DimensionMismatch("precompose: change of basis has wrong shape");
  }
  if (!equal(change.transpose() * form_.matrix() * change, form_.matrix())) {
    throw ValidationError("precompose: change of basis does not preserve the form");
  }
  BitVector values(dim());
  for (Index i = 0; i < dim(); ++i) values(i) = (*this)(change.col(i));
  return QuadraticRefinement(form_, std::move(values), base_);
}

Z2 polarize(const QuadraticRefinement& q, const BitVector& x, const BitVector& y) {
  if (x.size() != q.dim() || y.size() != q.dim()) throw DimensionMismatch("polarize: length mismatch");
  const BitVector sum = x + y;
  return q(sum) + q(x) + q(y) + q.base_parity();
}

Z2 arf(const QuadraticRefinement& q) {
  const BitMatrix basis = q.form().symplectic_basis();
  Z2 out(0);
  for (Index k = 0; k + 1 < basis.cols(); k += 2) {
    const Z2 ha = q(basis.col(k)) + q.base_parity();
    const Z2 hb = q(basis.col(k + 1)) + q.base_parity();
    out += ha * hb;
  }
  return out;
}

QuadraticRefinement spin_refinement(Index genus, Z2 parity) {
  if (genus == 0 && parity.value()) throw ValidationError("spin refinement: odd parity needs genus >= 1");
  BitVector values(2 * genus);
  for (Index k = 0; k < genus; ++k) {
    const Z2 on_a = (k == 0) ? parity : Z2(0);
    const Z2 on_b = Z2(1);
    values(2 * k) = on_a + parity;
    values(2 * k + 1) = on_b + parity;
  }
  return QuadraticRefinement(SymplecticForm::standard(genus), std::move(values), parity);
}

BitMatrix transvection(const SymplecticForm& form, const BitVector& v) {
  if (v.size() != form.dim()) throw DimensionMismatch("transvection: length mismatch");
  // x -> x + (x, v) v  ==  I + v (M v)^T
  const BitVector mv = form.matrix() * v;
  return identity_matrix(form.dim()) + v * mv.transpose();
}

}  // namespace split_spectral
