#pragma once

/**
 * Alternating forms and quadratic functions over GF(2).
 *
 * Coordinates of a standard symplectic space of dimension 2n are interleaved:
 * e_{2k} = a_{k+1}, e_{2k+1} = b_{k+1}, with (a_i, b_i) = 1 and every other
 * basis pairing 0.
 *
 * A QuadraticRefinement is a function q with
 *     q(x + y) + q(x) + q(y) + q(0) = (x, y).
 * Its constant q(0) is the base parity. With base parity 0 this is the usual
 * refinement law q(x + y) = q(x) + q(y) + (x, y). A nonzero base parity models
 * the mod-2 index of a twisted odd spin structure, whose value at the trivial
 * twist is 1; the homogeneous part q + q(0) is always a genuine refinement,
 * and the Arf invariant is taken of that part.
 */

#include "split_spectral/gf2.hpp"

namespace split_spectral {

class SymplecticForm {
 public:
  /// Throws ValidationError unless the matrix is square, symmetric and has
  /// zero diagonal; DegenerateForm unless it has full rank.
  explicit SymplecticForm(BitMatrix matrix);

  static SymplecticForm standard(Index genus);

  Index dim() const { return matrix_.rows(); }
  Index genus() const { return matrix_.rows() / 2; }
  const BitMatrix& matrix() const { return matrix_; }

  Z2 pairing(const BitVector& x, const BitVector& y) const;

  /// Columns a_1, b_1, a_2, b_2, ... forming a symplectic basis, obtained by
  /// symplectic Gram-Schmidt on the coordinate basis in index order.
  BitMatrix symplectic_basis() const;

 private:
  BitMatrix matrix_;
};

class QuadraticRefinement {
 public:
  /// values(i) = q(e_i). The function is determined by these, the form and q(0).
  QuadraticRefinement(SymplecticForm form, BitVector values, Z2 base_parity = Z2(0));

  const SymplecticForm& form() const { return form_; }
  const BitVector& values() const { return values_; }
  Z2 base_parity() const { return base_; }
  Index dim() const { return form_.dim(); }

  Z2 operator()(const BitVector& x) const;

  /// x -> q(change * x). Valid whenever change preserves the form; throws
  /// ValidationError otherwise.
  QuadraticRefinement precompose(const BitMatrix& change) const;

 private:
  SymplecticForm form_;
  BitVector values_;
  Z2 base_;
  BitMatrix upper_;   // strictly upper triangle of the form
  BitVector linear_;  // values + base_parity
};

/// q(x + y) + q(x) + q(y) + q(0); equals (x, y) for every refinement.
Z2 polarize(const QuadraticRefinement& q, const BitVector& x, const BitVector& y);

/// Sum of h(a_i) h(b_i) over a symplectic basis, h = q + q(0).
Z2 arf(const QuadraticRefinement& q);

/**
 * Refinement on the standard form of the given genus, used as the model of a
 * spin structure of the given parity: the homogeneous part takes value 1 on
 * every b_i, 0 on every a_i except a_1, where it takes the parity. Its Arf
 * invariant and its base parity both equal `parity`.
 */
QuadraticRefinement spin_refinement(Index genus, Z2 parity);

/// Symplectic transvection x -> x + (x, v) v, as a matrix.
BitMatrix transvection(const SymplecticForm& form, const BitVector& v);

}  // namespace split_spectral
