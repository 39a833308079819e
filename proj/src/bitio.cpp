#include "split_spectral/bitio.hpp"

#include <charconv>

namespace split_spectral {
namespace {

int hex_digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_hex(const BitVector& v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string digits;
  const Index nibbles = (v.size() + 3) / 4;
  for (Index j = 0; j < nibbles; ++j) {
    int d = 0;
    for (int b = 0; b < 4; ++b) {
      const Index i = 4 * j + b;
      if (i < v.size() && v(i).value()) d |= 1 << b;
    }
    digits.push_back(kDigits[d]);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (digits.empty()) digits = "0";
  return "0x" + std::string(digits.rbegin(), digits.rend());
}

BitVector parse_hex(std::string_view hex, Index len) {
  if (len < 0) throw ValidationError("hex: negative length");
  if (hex.size() < 3 || hex[0] != '0' || (hex[1] != 'x' && hex[1] != 'X')) {
    throw ValidationError("hex: expected 0x prefix in '" + std::string(hex) + "'");
  }
  BitVector v = BitVector::Zero(len);
  const std::string_view digits = hex.substr(2);
  const auto n = static_cast<Index>(digits.size());
  for (Index j = 0; j < n; ++j) {
    const int d = hex_digit_value(digits[static_cast<std::size_t>(n - 1 - j)]);
    if (d < 0) throw ValidationError("hex: bad digit in '" + std::string(hex) + "'");
    for (int b = 0; b < 4; ++b) {
      if (!((d >> b) & 1)) continue;
      const Index i = 4 * j + b;
      if (i >= len) {
        throw ValidationError("hex: '" + std::string(hex) + "' has bit " + std::to_string(i) +
                              " set but length is " + std::to_string(len));
      }
      v(i) = Z2(1);
    }
  }
  return v;
}

std::string to_tagged_hex(const BitVector& v) { return to_hex(v) + ":" + std::to_string(v.size()); }

BitVector parse_tagged_hex(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("expected <hex>:<len>, got '" + std::string(text) + "'");
  }
  const std::string_view len_text = text.substr(colon + 1);
  Index len = 0;
  const auto [ptr, ec] = std::from_chars(len_text.data(), len_text.data() + len_text.size(), len);
  if (ec != std::errc{} || ptr != len_text.data() + len_text.size()) {
    throw ValidationError("bad length in '" + std::string(text) + "'");
  }
  return parse_hex(text.substr(0, colon), len);
}

std::string to_bitstring(const BitVector& v) {
  std::string s(static_cast<std::size_t>(v.size()), '0');
  for (Index i = 0; i < v.size(); ++i) if (v(i).value()) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

BitVector parse_bitstring(std::string_view bits) {
  BitVector v(static_cast<Index>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw ValidationError("bit string may contain only 0 and 1: '" + std::string(bits) + "'");
    }
    v(static_cast<Index>(i)) = Z2(bits[i] == '1');
  }
  return v;
}

BitVector parse_bitvector(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) return parse_tagged_hex(text);
  return parse_bitstring(text);
}

std::vector<std::string> matrix_rows(const BitMatrix& m) {
  std::vector<std::string> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(to_bitstring(m.row(i).transpose()));
  return rows;
}

}  // namespace split_spectral
