#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "algdef/cohomology.hpp"
#include "algdef/counting.hpp"
#include "algdef/forms.hpp"
#include "algdef/moduli.hpp"
#include "algdef/properties.hpp"

namespace algdef {

inline constexpr const char* kVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// {"tool", "version", "command", "seed"}; seed is null when no randomized
/// check ran.
Json report_header(const std::string& command, std::optional<std::uint64_t> seed);

/// {"name", "dim", "source"} where source is "builder" or a file path.
Json input_descriptor(const NamedAlgebra& algebra, const std::string& source);

Json to_json(const Rational& r);
Json to_json(const RationalMatrix& m);
Json to_json(const std::vector<Vector>& basis);

/// Membership in the four varieties plus the coefficient symmetry flags.
Json membership_json(const MulTable& x);
Json to_json(const ResidualReport& r);
Json to_json(const CohomologySummary& s);
Json to_json(const GramForm& g);
Json to_json(const CharacterPair& c);
Json to_json(const RigidityVerdict& v);
Json to_json(const StratumInvariant& s);
Json to_json(const CountResult& c);
Json to_json(const BatteryReport& b);

}  // namespace algdef
