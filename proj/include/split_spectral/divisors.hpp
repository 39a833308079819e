#pragma once

/**
 * Even-weight subdivisors of the N ramification points, modulo the all-ones
 * divisor b0.
 *
 * A class {D, D + b0} is represented by its member of smaller weight. At
 * weight N/2 both members qualify and the lexicographically smaller bit string
 * wins, reading coordinate 0 as the most significant position. The invariant
 * M of a class is the weight of that representative, so 0 <= M <= N/2.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "split_spectral/bigint.hpp"
#include "split_spectral/gf2.hpp"

namespace split_spectral {

/// Hard limit for explicit class enumeration.
inline constexpr std::int64_t kMaxEnumerationN = 28;

class Divisor {
 public:
  /// Throws ValidationError if the support has odd weight.
  explicit Divisor(BitVector support);

  const BitVector& support() const { return support_; }
  std::int64_t N() const { return support_.size(); }
  std::int64_t degree() const { return weight(support_); }

  friend bool operator==(const Divisor& a, const Divisor& b) { return equal(a.support_, b.support_); }

 private:
  BitVector support_;
};

class DivisorClass {
 public:
  const Divisor& rep() const { return rep_; }
  std::int64_t M() const { return M_; }
  std::int64_t N() const { return rep_.N(); }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.rep_ == b.rep_; }

 private:
  friend DivisorClass canonicalize(const Divisor& d);
  explicit DivisorClass(Divisor rep) : rep_(std::move(rep)), M_(rep_.degree()) {}

  Divisor rep_;
  std::int64_t M_;
};

/// Canonical class of d; N must be even.
DivisorClass canonicalize(const Divisor& d);

/// Lexicographic comparison with coordinate 0 most significant.
bool lex_less(const BitVector& a, const BitVector& b);

/// C(N, M): divisors (not classes) with exactly M points of weight one.
BigInt count_by_M(std::int64_t N, std::int64_t M);

/// Number of classes with invariant M (M <= N/2): C(N, M) below the midpoint,
/// C(N, N/2) / 2 at it.
BigInt count_classes_with_M(std::int64_t N, std::int64_t M);

/// 2^{N-2}.
BigInt count_classes(std::int64_t N);

/// Sum over even M of C(N, M) == 2^{N-1}, checked in exact arithmetic.
bool multisection_identity(std::int64_t N);

/// Visits every class once in lexicographic order of the representative,
/// optionally only those with M <= max_M. Throws ResourceError if N exceeds
/// `limit` (itself capped at kMaxEnumerationN).
void for_each_class(std::int64_t N, std::optional<std::int64_t> max_M,
                    const std::function<void(const DivisorClass&)>& visit,
                    std::int64_t limit = kMaxEnumerationN);

std::vector<DivisorClass> enumerate_classes(std::int64_t N, std::optional<std::int64_t> max_M = std::nullopt,
                                            std::int64_t limit = kMaxEnumerationN);

/// Number of classes reached by enumeration, without materializing them.
std::uint64_t enumerate_count(std::int64_t N, std::optional<std::int64_t> max_M = std::nullopt,
                              std::int64_t limit = kMaxEnumerationN);

}  // namespace split_spectral
