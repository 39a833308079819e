#include <doctest.h>

#include "split_spectral/ko.hpp"
#include "support.hpp"

using namespace split_spectral;

namespace {

KOClass random_class(oracle::Rng& rng, Index dim) {
  return KOClass(static_cast<std::int64_t>(rng.below(9)) - 4, oracle::random_vector(rng, dim),
                 Z2(static_cast<int>(rng.next() & 1)));
}

}  // namespace

TEST_CASE("alpha examples") {
  const auto form = SymplecticForm::standard(2);
  const BitVector a1 = basis_vector(4, 0), b1 = basis_vector(4, 1);
  CHECK(alpha(zero_vector(4)) == KOClass(1, zero_vector(4), Z2(0)));
  CHECK(alpha(a1).add(alpha(b1), form) == KOClass(2, a1 + b1, Z2(1)));
  CHECK(alpha(a1).add(alpha(a1), form) == KOClass(2, zero_vector(4), Z2(0)));
}

TEST_CASE("omega examples") {
  const auto form = SymplecticForm::standard(2);
  const auto om = omega_point(4);
  CHECK(om.rank() == 0);
  CHECK(om.add(om, form) == KOClass(0, zero_vector(4), Z2(0)));
  const BitVector x = basis_vector(4, 2);
  CHECK(om.add(alpha(x), form) == KOClass(1, x, Z2(1)));
}

TEST_CASE("KO sum is an abelian group law") {
  oracle::Rng rng(9);
  const auto form = SymplecticForm::standard(3);
  const KOClass zero(0, zero_vector(6), Z2(0));
  for (int t = 0; t < 200; ++t) {
    const auto a = random_class(rng, 6), b = random_class(rng, 6), c = random_class(rng, 6);
    CHECK(a.add(b, form) == b.add(a, form));
    CHECK(a.add(b, form).add(c, form) == a.add(b.add(c, form), form));
    CHECK(a.add(zero, form) == a);
    const KOClass neg(-a.rank(), a.w1(), a.w2());
    CHECK(a.add(neg, form) == zero);
  }
  CHECK_THROWS_AS(alpha(zero_vector(4)).add(alpha(zero_vector(2)), form), DimensionMismatch);
}

TEST_CASE("phi examples") {
  for (int e = 0; e < 2; ++e) {
    const auto q = spin_refinement(2, Z2(e));
    CHECK(phi(omega_point(4), q) == Z2(1));
    for (std::int64_t n = -3; n <= 5; ++n) CHECK(phi(trivial_class(n, 4), q) == Z2(n) * Z2(e));
  }
  const auto q0 = spin_refinement(2, Z2(0));
  for (std::uint64_t x = 0; x < 16; ++x) {
    const BitVector xv = oracle::from_mask(x, 4);
    CHECK(phi(alpha(xv), q0) == q0(xv));
  }
  CHECK_THROWS_AS(phi(alpha(zero_vector(2)), q0), DimensionMismatch);
}

TEST_CASE("phi is additive, exhaustively in dimension 2") {
  for (int e = 0; e < 2; ++e) {
    const auto q = spin_refinement(1, Z2(e));
    for (int r = -2; r <= 2; ++r)
      for (int s = -2; s <= 2; ++s)
        for (std::uint64_t x = 0; x < 4; ++x)
          for (std::uint64_t y = 0; y < 4; ++y)
            for (int u = 0; u < 2; ++u)
              for (int v = 0; v < 2; ++v) {
                const KOClass c(r, oracle::from_mask(x, 2), Z2(u)), d(s, oracle::from_mask(y, 2), Z2(v));
                CHECK(phi(c.add(d, q.form()), q) == phi(c, q) + phi(d, q));
              }
  }
}

TEST_CASE("phi additivity and w2 recovery on random classes") {
  oracle::Rng rng(19);
  for (int t = 0; t < 400; ++t) {
    const Index genus = 1 + rng.below(4);
    // A random refinement, not only the spin model.
    const QuadraticRefinement q(SymplecticForm::standard(genus), oracle::random_vector(rng, 2 * genus),
                                Z2(static_cast<int>(rng.next() & 1)));
    const auto c = random_class(rng, 2 * genus), d = random_class(rng, 2 * genus);
    CHECK(phi(c.add(d, q.form()), q) == phi(c, q) + phi(d, q));
    const BitVector x = oracle::random_vector(rng, 2 * genus), y = oracle::random_vector(rng, 2 * genus);
    // The (x, y) in w2 of the sum cancels the cross term of q(x + y).
    CHECK(phi(alpha(x).add(alpha(y), q.form()), q) == q(x) + q(y));
    CHECK(phi(KOClass(2, x + y, Z2(0)), q) == q(x) + q(y) + q.form().pairing(x, y));
    CHECK(w2_from_phi(c, q) == c.w2());
  }
}

TEST_CASE("w2 from phi examples") {
  const auto q0 = spin_refinement(2, Z2(0));
  const BitVector x = basis_vector(4, 1);
  CHECK(w2_from_phi(KOClass(3, x, Z2(1)), q0) == Z2(1));
  CHECK(phi(KOClass(3, x, Z2(1)), q0) + phi(alpha(x), q0) == Z2(1));
  CHECK(w2_from_phi(omega_point(4), q0) == Z2(1));
  CHECK(w2_from_phi(alpha(x), q0) == Z2(0));
  // Odd spin structure: the plain two-term expression is off by (rank - 1) q(0).
  const auto q1 = spin_refinement(2, Z2(1));
  const KOClass c(2, x, Z2(0));
  CHECK(phi(c, q1) + phi(alpha(x), q1) == Z2(1));
  CHECK(w2_from_phi(c, q1) == Z2(0));
}

TEST_CASE("w1 of dual classes agree") {
  oracle::Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const BitVector x = oracle::random_vector(rng, 6);
    // det V- = (det V+)^*; on Z2 coefficients the dual has the same class.
    const KOClass plus(3, x, Z2(0)), minus(4, x, Z2(1));
    CHECK(equal(plus.w1(), minus.w1()));
    CHECK(is_zero(plus.add(minus, SymplecticForm::standard(3)).w1()));
  }
}
