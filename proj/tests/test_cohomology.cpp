#include <doctest.h>

#include <set>

#include "split_spectral/cohomology.hpp"
#include "support.hpp"

using namespace split_spectral;

namespace {

CoverCohomologyModel with_norm(const CoverCohomologyModel& m, BitMatrix norm, BitVector shift) {
  return CoverCohomologyModel(m.params(), m.sigma(), m.sbar(), std::move(norm), m.pullback_matrix(),
                              std::move(shift));
}

}  // namespace

TEST_CASE("surface cohomology carries the requested parity") {
  for (int e = 0; e < 2; ++e) {
    const auto c = surface_cohomology(3, Z2(e));
    CHECK(c.dim() == 6);
    CHECK(arf(c.q) == Z2(e));
    CHECK(c.parity() == Z2(e));
  }
}

TEST_CASE("model examples") {
  SUBCASE("m = 3, g = 2") {
    const auto model = build_cover_model(CurveParams::make(3, 2));
    CHECK(equal(model.norm_matrix() * model.pullback_matrix(), identity_matrix(4)));
    CHECK(prym_kernel_basis(model).cols() == 2 * 16 - 4);
  }
  SUBCASE("m = 2, g = 2") {
    const auto model = build_cover_model(CurveParams::make(2, 2));
    CHECK(is_zero(model.norm_matrix() * model.pullback_matrix()));
    const BitMatrix ker = prym_kernel_basis(model);
    CHECK(ker.cols() == 10);
    CHECK(span_contains(ker, model.pullback_matrix()));
  }
  SUBCASE("m = 1, g = 2") {
    const auto model = build_cover_model(CurveParams::make(1, 2));
    CHECK(equal(model.norm_matrix(), identity_matrix(4)));
    CHECK(equal(model.pullback_matrix(), identity_matrix(4)));
  }
}

TEST_CASE("model relations across the range, checked directly") {
  for (std::int64_t m = 1; m <= 8; ++m) {
    for (std::int64_t g = 2; g <= 6; ++g) {
      const auto p = CurveParams::make(m, g);
      const auto model = build_cover_model(p);
      const Index two_g = 2 * g, two_h = 2 * build_geometry(p).g_Sbar;
      REQUIRE(model.norm_matrix().rows() == two_g);
      REQUIRE(model.norm_matrix().cols() == two_h);
      CHECK(model.validate().empty());
      const BitMatrix composite = model.norm_matrix() * model.pullback_matrix();
      for (Index i = 0; i < two_g; ++i)
        for (Index j = 0; j < two_g; ++j) CHECK(composite(i, j).value() == (i == j ? int(m % 2) : 0));
      CHECK(rank(model.norm_matrix()) == two_g);
      CHECK(rank(model.pullback_matrix()) == two_g);
      CHECK(norm_sequence_check(model).exact_everywhere());
    }
  }
}

TEST_CASE("projection formula and pulled-back form, exhaustively on small models") {
  for (const auto& [m, g] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}}) {
    const auto model = build_cover_model(CurveParams::make(m, g));
    const Index two_g = model.sigma().dim(), two_h = model.sbar().dim();
    oracle::Rng rng(static_cast<std::uint64_t>(m * 10 + g));
    for (std::uint64_t x = 0; x < (1ull << two_g); ++x) {
      const BitVector xv = oracle::from_mask(x, two_g);
      for (int t = 0; t < 64; ++t) {
        const BitVector F = oracle::random_vector(rng, two_h);
        CHECK(model.sigma().form().pairing(model.norm(F), xv) == model.sbar().form().pairing(F, model.pullback(xv)));
      }
      for (std::uint64_t y = 0; y < (1ull << two_g); ++y) {
        const BitVector yv = oracle::from_mask(y, two_g);
        const Z2 up = model.sbar().form().pairing(model.pullback(xv), model.pullback(yv));
        CHECK(up.value() == (m % 2) * oracle::std_pairing(x, y, g));
      }
    }
  }
}

TEST_CASE("kernel of Nm by brute force for m = 2, g = 2") {
  const auto model = build_cover_model(CurveParams::make(2, 2));
  CHECK(oracle::kernel_size(model.norm_matrix()) == (1ull << 10));
}

TEST_CASE("split report examples") {
  SUBCASE("m = 3 direct sum") {
    const auto r = lemma_h_split(build_cover_model(CurveParams::make(3, 2)));
    CHECK(r.holds);
    CHECK(r.m_odd);
    CHECK(r.dims == std::vector<Index>{28, 4});
    CHECK(r.zero_intersection);
    CHECK(r.section);
  }
  SUBCASE("m = 2 filtration") {
    const auto r = lemma_h_split(build_cover_model(CurveParams::make(2, 2)));
    CHECK(r.holds);
    CHECK_FALSE(r.m_odd);
    CHECK(r.dims == std::vector<Index>{4, 6, 4});
    CHECK(r.filtration);
  }
  SUBCASE("corrupted Nm is reported") {
    const auto good = build_cover_model(CurveParams::make(3, 2));
    BitMatrix norm = good.norm_matrix();
    norm.row(0).setZero();
    const auto bad = with_norm(good, norm, zero_vector(4));
    CHECK_FALSE(bad.validate().empty());
    const auto r = lemma_h_split(bad);
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.violations.empty());
  }
  SUBCASE("corrupted Nm, m even") {
    const auto good = build_cover_model(CurveParams::make(2, 2));
    BitMatrix norm = good.norm_matrix();
    norm(0, 0) = Z2(1);  // reads an a-type coordinate hit by the pullback
    const auto r = lemma_h_split(with_norm(good, norm, zero_vector(4)));
    CHECK_FALSE(r.holds);
  }
}

TEST_CASE("split holds for m <= 6, g <= 4") {
  for (std::int64_t m = 1; m <= 6; ++m) {
    for (std::int64_t g = 2; g <= 4; ++g) {
      const auto p = CurveParams::make(m, g);
      const auto r = lemma_h_split(build_cover_model(p));
      CHECK(r.holds);
      const Index h = build_geometry(p).g_Sbar;
      if (m % 2) {
        CHECK(r.dims == std::vector<Index>{2 * h - 2 * g, 2 * g});
      } else {
        CHECK(r.dims == std::vector<Index>{2 * g, 2 * h - 4 * g, 2 * g});
      }
    }
  }
}

TEST_CASE("affine norm is flagged") {
  const auto good = build_cover_model(CurveParams::make(2, 2));
  const auto bad = with_norm(good, good.norm_matrix(), basis_vector(4, 0));
  const auto v = bad.validate();
  REQUIRE_FALSE(v.empty());
  CHECK(v.front() == "norm map is affine, not linear");
}

TEST_CASE("shape errors in model assembly") {
  const auto good = build_cover_model(CurveParams::make(2, 2));
  CHECK_THROWS_AS(with_norm(good, BitMatrix::Zero(4, 13), zero_vector(4)), DimensionMismatch);
  CHECK_THROWS_AS(with_norm(good, good.norm_matrix(), zero_vector(3)), DimensionMismatch);
}

TEST_CASE("SO fibre examples") {
  const auto a = so_fiber_model(CurveParams::make(2, 2));
  CHECK(a.dim_quotient == 6);
  CHECK(a.copies == 2);
  CHECK(a.points_per_copy == 64);
  CHECK(a.dim_prym2 == 20);
  CHECK(a.holds);
  CHECK(so_fiber_model(CurveParams::make(1, 2)).dim_quotient == 2);
  CHECK(so_fiber_model(CurveParams::make(3, 2)).dim_quotient == 10);
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t g = 2; g <= 4; ++g) CHECK(so_fiber_model(CurveParams::make(m, g)).holds);
}
