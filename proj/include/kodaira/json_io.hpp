#pragma once

#include <string>

#include <json.hpp>

#include "kodaira/douady.hpp"
#include "kodaira/fibres.hpp"
#include "kodaira/graphspace.hpp"
#include "kodaira/invariants.hpp"
#include "kodaira/lattice.hpp"

namespace kodaira {

// Reports preserve field order for byte-stable output.
using Json = nlohmann::ordered_json;

// Parses text as JSON, rethrowing parse failures as SchemaError with a
// line:column diagnostic.
Json parse_json(const std::string& text, const std::string& origin);

// --- input schemas ---------------------------------------------------------
NeronSeveriLattice lattice_from_json(const Json& j);
ChernData chern_from_json(const Json& j, const NeronSeveriLattice& lat);
SheafRecord record_from_json(const Json& j);

// --- report serialization --------------------------------------------------
Json to_json(const Rat& r);  // {"num": "...", "den": "..."} as strings, exact
Json to_json(const NSVector& v);
Json to_json(const NeronSeveriLattice& lat);
Json to_json(const ChernData& ch);
Json to_json(const ModuliReport& rep);
Json to_json(const GraphSpaceDescriptor& d);
Json to_json(const StratumDescriptor& s);
Json to_json(const ComponentDescriptor& c);
Json to_json(const FibreDescriptor& f);
Json to_json(const SheafRecord& s);
Json to_json(const TopologyReport& rep);
Json to_json(const Pi1Descriptor& p);
Json to_json(const BaseComparison& c);
Json to_json(const FibrationCensus& c);

}  // namespace kodaira
