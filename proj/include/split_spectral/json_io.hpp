#pragma once

// JSON records for the library types. Object keys keep insertion order so
// that output is byte-stable; big integers are written as decimal strings.

#include <json.hpp>

#include "split_spectral/bigint.hpp"
#include "split_spectral/cohomology.hpp"
#include "split_spectral/components.hpp"
#include "split_spectral/covers.hpp"
#include "split_spectral/degrees.hpp"
#include "split_spectral/errata.hpp"
#include "split_spectral/hitchin.hpp"
#include "split_spectral/ko.hpp"
#include "split_spectral/swdata.hpp"

namespace split_spectral {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
Json to_json(const BitVector& v);  // {"hex": "0x..", "len": n}
Json to_json(const CoverGeometry& geo);
Json to_json(const CoverCohomologyModel& model);
Json to_json(const SplitReport& r);
Json to_json(const SoFiberReport& r);
Json to_json(const KOClass& c);
Json to_json(const SWClasses& c);
Json to_json(const DegreeProfile& p);
Json to_json(const MilnorWood& mw);
Json to_json(const ComponentDescriptor& d);
Json to_json(const GradingTable& t);
Json to_json(const MaximalCase& r);
Json to_json(const GradedBundle& b);
Json to_json(const HitchinChecks& c);
Json to_json(const ErratumEntry& e);
Json to_json(const std::vector<ErratumEntry>& ledger);

/// Accepts "0x..:len", a bit string, or {"hex": .., "len": ..}.
BitVector bitvector_from_json(const Json& j);

}  // namespace split_spectral
