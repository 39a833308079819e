#pragma once

// Text forms for mod-2 vectors.
//
//   hex:        "0x" + hexadecimal; bit i of the vector is bit i of the number
//               (index 0 is the least significant bit). Length travels separately.
//   tagged hex: "0x<hex>:<len>", used on the command line.
//   bit string: one character per coordinate, index 0 first.

#include <string>
#include <string_view>

#include "split_spectral/gf2.hpp"

namespace split_spectral {

std::string to_hex(const BitVector& v);
BitVector parse_hex(std::string_view hex, Index len);

std::string to_tagged_hex(const BitVector& v);
BitVector parse_tagged_hex(std::string_view text);

std::string to_bitstring(const BitVector& v);
BitVector parse_bitstring(std::string_view bits);

/// Accepts either a bit string or "0x<hex>:<len>".
BitVector parse_bitvector(std::string_view text);

/// Row-major rows as bit strings.
std::vector<std::string> matrix_rows(const BitMatrix& m);

}  // namespace split_spectral
