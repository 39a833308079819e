#include "split_spectral/divisors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace split_spectral {
namespace {

void require_even_N(std::int64_t N, const char* who) {
  if (N < 0 || N % 2 != 0) {
    throw ValidationError(std::string(who) + ": N must be a non-negative even integer (got " +
                          std::to_string(N) + ")");
  }
}

// Patterns carry coordinate i in bit (N - 1 - i), so numeric order is the
// lexicographic order of bit strings.
template <typename Visit>
void scan_canonical(std::int64_t N, std::optional<std::int64_t> max_M, std::int64_t limit, Visit&& visit) {
  require_even_N(N, "enumerate_classes");
  const std::int64_t cap = std::min(limit, kMaxEnumerationN);
  if (N > cap) {
    throw ResourceError("enumerate_classes: N = " + std::to_string(N) + " exceeds the enumeration limit " +
                        std::to_string(cap));
  }
  if (N < 2) throw ValidationError("enumerate_classes: need N >= 2");
  const std::uint32_t mask = N == 32 ? ~0u : ((1u << N) - 1u);
  const int half = static_cast<int>(N / 2);
  for (std::uint64_t x = 0; x <= mask; ++x) {
    const auto pattern = static_cast<std::uint32_t>(x);
    const int w = std::popcount(pattern);
    if (w & 1) continue;
    if (w > half) continue;
    if (w == half && pattern > (~pattern & mask)) continue;
    if (max_M && w > *max_M) continue;
    visit(pattern, w);
  }
}

}  // namespace

Divisor::Divisor(BitVector support) : support_(std::move(support)) {
  if (weight(support_) % 2 != 0) {
    throw ValidationError("divisor has odd weight " + std::to_string(weight(support_)) +
                          "; only even-weight subdivisors are allowed");
  }
}

bool lex_less(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("lex_less: length mismatch");
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) == b(i)) continue;
    return a(i).value() < b(i).value();
  }
  return false;
}

DivisorClass canonicalize(const Divisor& d) {
  require_even_N(d.N(), "canonicalize");
  BitVector partner = d.support();
  for (Index i = 0; i < partner.size(); ++i) partner(i) += Z2(1);
  const Index w = d.degree();
  const Index pw = d.N() - w;
  if (w < pw || (w == pw && !lex_less(partner, d.support()))) return DivisorClass(d);
  return DivisorClass(Divisor(std::move(partner)));
}

BigInt count_by_M(std::int64_t N, std::int64_t M) {
  require_even_N(N, "count_by_M");
  if (M % 2 != 0) throw ValidationError("count_by_M: M must be even (got " + std::to_string(M) + ")");
  if (M < 0 || M > N) {
    throw ValidationError("count_by_M: need 0 <= M <= N (got M = " + std::to_string(M) + ", N = " +
                          std::to_string(N) + ")");
  }
  return binomial(N, M);
}

BigInt count_classes_with_M(std::int64_t N, std::int64_t M) {
  require_even_N(N, "count_classes_with_M");
  if (M % 2 != 0 || M < 0 || 2 * M > N) {
    throw ValidationError("count_classes_with_M: need even 0 <= M <= N/2 (got M = " + std::to_string(M) + ")");
  }
  if (2 * M == N) return binomial(N, M) / 2;
  return binomial(N, M);
}

BigInt count_classes(std::int64_t N) {
  require_even_N(N, "count_classes");
  if (N < 2) throw ValidationError("count_classes: need N >= 2");
  return pow2(N - 2);
}

bool multisection_identity(std::int64_t N) {
  require_even_N(N, "multisection_identity");
  if (N < 2) throw ValidationError("multisection_identity: need N >= 2");
  BigInt sum = 0;
  for (std::int64_t M = 0; M <= N; M += 2) sum += binomial(N, M);
  return sum == pow2(N - 1);
}

void for_each_class(std::int64_t N, std::optional<std::int64_t> max_M,
                    const std::function<void(const DivisorClass&)>& visit, std::int64_t limit) {
  scan_canonical(N, max_M, limit, [&](std::uint32_t pattern, int) {
    BitVector support(N);
    for (Index i = 0; i < N; ++i) support(i) = Z2((pattern >> (N - 1 - i)) & 1u);
    visit(canonicalize(Divisor(std::move(support))));
  });
}

std::vector<DivisorClass> enumerate_classes(std::int64_t N, std::optional<std::int64_t> max_M,
                                            std::int64_t limit) {
  std::vector<DivisorClass> out;
  for_each_class(N, max_M, [&](const DivisorClass& c) { out.push_back(c); }, limit);
  return out;
}

std::uint64_t enumerate_count(std::int64_t N, std::optional<std::int64_t> max_M, std::int64_t limit) {
  std::uint64_t count = 0;
  scan_canonical(N, max_M, limit, [&](std::uint32_t, int) { ++count; });
  return count;
}

}  // namespace split_spectral
