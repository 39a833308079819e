#pragma once

// Places where the implementation departs from the printed formulas.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "split_spectral/covers.hpp"

namespace split_spectral {

struct ErratumEntry {
  std::string id;
  std::string subject;
  std::string printed;
  std::string adopted;
  std::string evidence;
  // Instantiated at given (m, g) when available.
  std::optional<std::string> printed_value;
  std::optional<std::string> adopted_value;
  std::optional<bool> printed_passes_oracle;
};

std::vector<ErratumEntry> errata_ledger(std::optional<CurveParams> at = std::nullopt);

}  // namespace split_spectral
