#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace split_spectral::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInvariant = 2;

/// Arguments exclude the program name. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Enumeration bound from SPLIT_SPECTRAL_MAX_ENUM, default 20.
std::int64_t enumeration_limit();

}  // namespace split_spectral::cli
