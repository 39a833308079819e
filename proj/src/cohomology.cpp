#include "split_spectral/cohomology.hpp"

namespace split_spectral {

SurfaceCohomology surface_cohomology(std::int64_t genus, Z2 parity) {
  return SurfaceCohomology{genus, spin_refinement(genus, parity)};
}

CoverCohomologyModel::CoverCohomologyModel(CurveParams params, SurfaceCohomology sigma, SurfaceCohomology sbar,
                                           BitMatrix norm, BitMatrix pullback, BitVector norm_shift)
    : params_(params),
      sigma_(std::move(sigma)),
      sbar_(std::move(sbar)),
      norm_(std::move(norm)),
      pullback_(std::move(pullback)),
      shift_(std::move(norm_shift)) {
  if (norm_.rows() != sigma_.dim() || norm_.cols() != sbar_.dim()) {
    throw DimensionMismatch("cover model: norm must be dim H(Sigma) x dim H(Sbar)");
  }
  if (pullback_.rows() != sbar_.dim() || pullback_.cols() != sigma_.dim()) {
    throw DimensionMismatch("cover model: pullback must be dim H(Sbar) x dim H(Sigma)");
  }
  if (shift_.size() != sigma_.dim()) throw DimensionMismatch("cover model: norm shift has wrong length");
}

BitVector CoverCohomologyModel::norm(const BitVector& F) const { return apply(norm_, F) + shift_; }

BitVector CoverCohomologyModel::pullback(const BitVector& x) const { return apply(pullback_, x); }

std::vector<std::string> CoverCohomologyModel::validate() const {
  std::vector<std::string> bad;
  const Index two_g = sigma_.dim();
  const Index two_h = sbar_.dim();
  if (!is_zero(shift_)) bad.push_back("norm map is affine, not linear");
  if (rank(norm_) != two_g) bad.push_back("norm is not surjective");
  if (rank(pullback_) != two_g) bad.push_back("pullback is not injective");

  const BitMatrix composite = norm_ * pullback_;
  const BitMatrix expected = m_parity().value() ? identity_matrix(two_g) : BitMatrix::Zero(two_g, two_g);
  if (!equal(composite, expected)) bad.push_back("Nm o pullback != m * Id (mod 2)");

  const BitMatrix pulled_form = pullback_.transpose() * sbar_.form().matrix() * pullback_;
  const BitMatrix scaled = m_parity().value() ? BitMatrix(sigma_.form().matrix()) : BitMatrix::Zero(two_g, two_g);
  if (!equal(pulled_form, scaled)) bad.push_back("pullback does not scale the intersection form by m");

  // (Nm F, x) = (F, pullback x) for all F, x:  Nm^T Omega_Sigma == Omega_Sbar pullback
  if (!equal(norm_.transpose() * sigma_.form().matrix(), sbar_.form().matrix() * pullback_)) {
    bad.push_back("projection formula fails");
  }
  if (two_h - rank(norm_) != two_h - two_g) bad.push_back("dim ker Nm != 2h - 2g");
  return bad;
}

CoverCohomologyModel build_cover_model(const CurveParams& p, Z2 eps_sigma, Z2 eps_sbar) {
  const CoverGeometry geo = build_geometry(p);
  const Index g = p.g;
  const Index h = geo.g_Sbar;
  SurfaceCohomology sigma = surface_cohomology(g, eps_sigma);
  SurfaceCohomology sbar = surface_cohomology(h, eps_sbar);

  BitMatrix norm = BitMatrix::Zero(2 * g, 2 * h);
  BitMatrix pullback = BitMatrix::Zero(2 * h, 2 * g);
  if (p.m % 2 != 0) {
    if (h < g) throw InvariantViolation("cover model: genus of Sbar below genus of Sigma");
    for (Index i = 0; i < 2 * g; ++i) {
      pullback(i, i) = Z2(1);
      norm(i, i) = Z2(1);
    }
  } else {
    if (h < 2 * g) throw InvariantViolation("cover model: need genus(Sbar) >= 2 genus(Sigma) for m even");
    for (Index j = 0; j < 2 * g; ++j) {
      pullback(2 * j, j) = Z2(1);  // a_{j+1}
      // Nm F = Omega_Sigma applied to (F_{b_1}, ..., F_{b_2g}); Omega swaps 2k <-> 2k+1.
      const Index target = j ^ 1;
      norm(target, 2 * j + 1) = Z2(1);
    }
  }
  CoverCohomologyModel model(p, std::move(sigma), std::move(sbar), std::move(norm), std::move(pullback),
                             zero_vector(2 * g));
  if (const auto bad = model.validate(); !bad.empty()) {
    throw InvariantViolation("cover model construction: " + bad.front());
  }
  return model;
}

BitMatrix prym_kernel_basis(const CoverCohomologyModel& model) {
  return kernel_basis(model.norm_matrix());
}

SplitReport lemma_h_split(const CoverCohomologyModel& model) {
  SplitReport r;
  r.m_odd = model.m_parity().value() != 0;
  const Index two_g = model.sigma().dim();
  const Index two_h = model.sbar().dim();
  const BitMatrix& nm = model.norm_matrix();
  const BitMatrix& pb = model.pullback_matrix();
  const BitMatrix ker = kernel_basis(nm);
  const Index dim_ker = ker.cols();
  const Index dim_im = rank(pb);

  if (!is_zero(model.norm_shift())) r.violations.push_back("norm map is affine, not linear");
  if (rank(nm) != two_g) r.violations.push_back("norm is not surjective");
  if (dim_im != two_g) r.violations.push_back("pullback is not injective");

  if (r.m_odd) {
    r.dims = {dim_ker, dim_im};
    r.zero_intersection = intersection_dim(ker, pb) == 0;
    r.section = rank(BitMatrix(nm * pb)) == two_g;
    if (!r.zero_intersection) r.violations.push_back("ker Nm meets im pullback");
    if (!r.section) r.violations.push_back("Nm restricted to im pullback is not onto H(Sigma)");
    if (dim_ker + dim_im != two_h) r.violations.push_back("dim ker Nm + dim im pullback != dim H(Sbar)");
  } else {
    r.filtration = span_contains(ker, pb);
    if (!r.filtration) r.violations.push_back("im pullback is not contained in ker Nm");
    const Index middle = r.filtration ? quotient_dim(ker, pb) : dim_ker - dim_im;
    r.dims = {dim_im, middle, two_h - dim_ker};
    if (r.dims[0] != two_g || r.dims[2] != two_g || r.dims[1] != two_h - 2 * two_g) {
      r.violations.push_back("graded dimensions differ from (2g, 2h - 4g, 2g)");
    }
  }
  r.holds = r.violations.empty();
  return r;
}

ExactSequenceCheck norm_sequence_check(const CoverCohomologyModel& model) {
  const BitMatrix ker = kernel_basis(model.norm_matrix());
  return check_exact<Z2>({ker, model.norm_matrix()});
}

SoFiberReport so_fiber_model(const CurveParams& p) {
  const CoverGeometry geo = build_geometry(p);
  const Index two_h = 2 * geo.g_Sbar;
  const Index N = geo.N;
  const Index ambient = two_h + N;

  // Spanning set of H^1(Sbar) + even-weight subdivisors.
  BitMatrix prym(ambient, two_h + N - 1);
  prym.setZero();
  for (Index i = 0; i < two_h; ++i) prym(i, i) = Z2(1);
  for (Index i = 0; i + 1 < N; ++i) {
    prym(two_h + i, two_h + i) = Z2(1);
    prym(two_h + i + 1, two_h + i) = Z2(1);
  }
  BitMatrix b0 = BitMatrix::Zero(ambient, 1);
  for (Index i = 0; i < N; ++i) b0(two_h + i, 0) = Z2(1);

  // rho^* H^1(Sbar) together with b0, i.e. the M = 0 points.
  BitMatrix killed(ambient, two_h + 1);
  killed << prym.leftCols(two_h), b0;

  SoFiberReport r;
  r.dim_prym2 = quotient_dim(prym, b0);
  r.dim_quotient = quotient_dim(prym, killed);
  r.expected = N - 2;
  r.points_per_copy = pow2(r.dim_quotient);
  r.holds = r.dim_quotient == r.expected && r.dim_quotient == geo.dim_so_fiber && r.dim_prym2 == geo.dim_prym2;
  return r;
}

}  // namespace split_spectral
