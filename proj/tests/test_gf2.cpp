#include <doctest.h>

#include <set>

#include "split_spectral/bitio.hpp"
#include "split_spectral/gf2.hpp"
#include "support.hpp"

using namespace split_spectral;

TEST_CASE("Z2 arithmetic") {
  CHECK(Z2(1) + Z2(1) == Z2(0));
  CHECK(Z2(1) * Z2(1) == Z2(1));
  CHECK(Z2(1) * Z2(0) == Z2(0));
  CHECK(Z2(3) == Z2(1));
  CHECK(Z2(-1) == Z2(1));
  CHECK(Z2(-2) == Z2(0));
  CHECK(-Z2(1) == Z2(1));
  CHECK(Z2(1) / Z2(1) == Z2(1));
  CHECK_THROWS_AS(Z2(1) / Z2(0), std::domain_error);
}

TEST_CASE("rank examples") {
  CHECK(rank(identity_matrix(2)) == 2);
  CHECK(rank(BitMatrix::Zero(3, 3)) == 0);
  BitMatrix ones(2, 2);
  ones << Z2(1), Z2(1), Z2(1), Z2(1);
  CHECK(rank(ones) == 1);
  CHECK(rank(BitMatrix(0, 5)) == 0);
}

TEST_CASE("rank matches an xor-basis oracle and rank-nullity holds") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Index r = 1 + rng.below(12), c = 1 + rng.below(12);
    const BitMatrix m = oracle::random_matrix(rng, r, c);
    const Index rk = rank(m);
    CHECK(rk == oracle::mask_rank(m));
    CHECK(rk <= std::min(r, c));
    const BitMatrix k = kernel_basis(m);
    CHECK(k.cols() + rk == c);
    CHECK(is_zero(m * k));
    CHECK(rank(k) == k.cols());
    CHECK((std::uint64_t{1} << k.cols()) == oracle::kernel_size(m));
    const BitMatrix im = image_basis(m);
    CHECK(im.cols() == rk);
    CHECK(same_span(im, m));
  }
}

TEST_CASE("elimination is deterministic with leftmost pivots") {
  BitMatrix m(3, 4);
  m << Z2(0), Z2(1), Z2(1), Z2(0),
       Z2(0), Z2(1), Z2(0), Z2(1),
       Z2(0), Z2(0), Z2(1), Z2(1);
  const auto e = reduced_row_echelon(m);
  CHECK(e.pivots == std::vector<Index>{1, 2});
  const auto again = reduced_row_echelon(m);
  CHECK(equal(e.reduced, again.reduced));
}

TEST_CASE("elimination also works over a non-binary scalar") {
  Eigen::MatrixXd m(2, 3);
  m << 1, 2, 3, 2, 4, 6;
  CHECK(rank(m) == 1);
  CHECK(kernel_basis(m).cols() == 2);
}

TEST_CASE("apply and compose check shapes") {
  const BitMatrix m = BitMatrix::Zero(2, 3);
  CHECK_THROWS_AS(apply(m, zero_vector(2)), DimensionMismatch);
  CHECK(apply(m, zero_vector(3)).size() == 2);
  CHECK_THROWS_AS(compose(m, BitMatrix::Zero(2, 2)), DimensionMismatch);
  CHECK(compose(m, BitMatrix::Zero(3, 4)).cols() == 4);
}

TEST_CASE("weight counts ones") {
  CHECK(weight(oracle::from_mask(0b1011, 6)) == 3);
  CHECK(weight(zero_vector(0)) == 0);
}

TEST_CASE("quotient dimension against coset enumeration") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const Index n = 1 + rng.below(10);
    const BitMatrix V = oracle::random_matrix(rng, n, 1 + rng.below(6));
    // W: random combinations of V's columns, so W is inside V.
    const BitMatrix W = V * oracle::random_matrix(rng, V.cols(), 1 + rng.below(4));

    std::set<std::uint64_t> span_w, cosets;
    for (std::uint64_t c = 0; c < (1ull << W.cols()); ++c) {
      span_w.insert(oracle::to_mask(W * oracle::from_mask(c, W.cols())));
    }
    for (std::uint64_t c = 0; c < (1ull << V.cols()); ++c) {
      const std::uint64_t v = oracle::to_mask(V * oracle::from_mask(c, V.cols()));
      std::uint64_t lowest = ~0ull;
      for (auto w : span_w) lowest = std::min(lowest, v ^ w);
      cosets.insert(lowest);
    }
    const Index q = quotient_dim(V, W);
    CHECK((std::uint64_t{1} << q) == cosets.size());
    CHECK(q == rank(V) - rank(W));
  }
}

TEST_CASE("quotient_dim rejects a non-subspace") {
  CHECK_THROWS_AS(quotient_dim(basis_vector(2, 0), basis_vector(2, 1)), ValidationError);
}

TEST_CASE("intersection_dim of coordinate planes") {
  BitMatrix a(3, 2), b(3, 2);
  a << Z2(1), Z2(0), Z2(0), Z2(1), Z2(0), Z2(0);
  b << Z2(0), Z2(0), Z2(1), Z2(0), Z2(0), Z2(1);
  CHECK(intersection_dim(a, b) == 1);
}

TEST_CASE("check_exact examples") {
  SUBCASE("identity") {
    const auto r = check_exact<Z2>({identity_matrix(2)});
    CHECK(r.exact_everywhere());
  }
  BitMatrix inc(2, 1);
  inc << Z2(1), Z2(0);
  SUBCASE("exact three-term") {
    BitMatrix proj(1, 2);
    proj << Z2(0), Z2(1);
    const auto r = check_exact<Z2>({inc, proj});
    CHECK(r.exact_everywhere());
    CHECK(r.junction_exact.size() == 3);
    CHECK(r.composite_zero == std::vector<bool>{true});
  }
  SUBCASE("not exact in the middle") {
    BitMatrix proj(1, 2);
    proj << Z2(1), Z2(0);
    const auto r = check_exact<Z2>({inc, proj});
    CHECK_FALSE(r.junction_exact[1]);
    CHECK(r.junction_exact.front());
    CHECK(r.junction_exact.back());
    CHECK_FALSE(r.interior_exact());
  }
  SUBCASE("composability") {
    CHECK_THROWS_AS(check_exact<Z2>({inc, identity_matrix(3)}), DimensionMismatch);
    CHECK_THROWS_AS(check_exact<Z2>({}), ValidationError);
  }
}

TEST_CASE("check_exact agrees with brute-force image and kernel") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Index a = 1 + rng.below(4), b = 1 + rng.below(5), c = 1 + rng.below(4);
    const BitMatrix f = oracle::random_matrix(rng, b, a);
    const BitMatrix g = oracle::random_matrix(rng, c, b);
    std::set<std::uint64_t> image, kernel;
    for (std::uint64_t x = 0; x < (1ull << a); ++x) image.insert(oracle::to_mask(f * oracle::from_mask(x, a)));
    for (std::uint64_t y = 0; y < (1ull << b); ++y) {
      if (oracle::to_mask(g * oracle::from_mask(y, b)) == 0) kernel.insert(y);
    }
    CHECK(check_exact<Z2>({f, g}).junction_exact[1] == (image == kernel));
  }
}

TEST_CASE("hex text form") {
  CHECK(to_hex(zero_vector(14)) == "0x0");
  CHECK(to_hex(basis_vector(14, 0)) == "0x1");
  CHECK(to_hex(basis_vector(14, 3)) == "0x8");
  CHECK(to_hex(basis_vector(14, 13)) == "0x2000");
  CHECK(to_tagged_hex(basis_vector(5, 4)) == "0x10:5");
  CHECK(equal(parse_tagged_hex("0x10:5"), basis_vector(5, 4)));
  CHECK(equal(parse_hex("0X1f", 5), oracle::from_mask(0x1f, 5)));
  CHECK_THROWS_AS(parse_hex("0x20", 5), ValidationError);
  CHECK_THROWS_AS(parse_hex("12", 5), ValidationError);
  CHECK_THROWS_AS(parse_hex("0xg", 5), ValidationError);
  CHECK_THROWS_AS(parse_tagged_hex("0x1"), ValidationError);
  CHECK_THROWS_AS(parse_tagged_hex("0x1:x"), ValidationError);

  oracle::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const BitVector v = oracle::random_vector(rng, rng.below(70));
    CHECK(equal(parse_tagged_hex(to_tagged_hex(v)), v));
    CHECK(equal(parse_bitvector(to_bitstring(v)), v));
  }
}

TEST_CASE("bit strings put index 0 first") {
  CHECK(to_bitstring(basis_vector(4, 0)) == "1000");
  CHECK(equal(parse_bitstring("0010"), basis_vector(4, 2)));
  CHECK_THROWS_AS(parse_bitstring("01x"), ValidationError);
  BitMatrix m(2, 3);
  m << Z2(1), Z2(0), Z2(1), Z2(0), Z2(1), Z2(0);
  CHECK(matrix_rows(m) == std::vector<std::string>{"101", "010"});
}
