#pragma once

#include <string>

#include "polyra/adversary.hpp"
#include "polyra/core.hpp"
#include "polyra/engine.hpp"
#include "polyra/polytope.hpp"

#include <json.hpp>

namespace polyra {

// Wire formats. Field names are part of the CLI contract:
//   instance  {"K":int,"M":int,"C":float,"rewards":[float,...]}
//   sequence  {"periods":[[{"type":int,"mass":float},...],...]}
//   polytope  {"dimension":int,"constraints":[{"coeffs":[...],"rhs":f}],"label":s}

nlohmann::json instance_to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const nlohmann::json& j);

nlohmann::json sequence_to_json(const ArrivalSequence& seq);
ArrivalSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const SequenceFamily& fam);

nlohmann::json report_to_json(const SimulationReport& report);

/// Reads and parses a JSON file; throws std::runtime_error with a readable
/// message on I/O or parse failure.
nlohmann::json load_json_file(const std::string& path);

} // namespace polyra
