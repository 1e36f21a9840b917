#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mixknap/cut.hpp"
#include "mixknap/fdi.hpp"
#include "mixknap/hull.hpp"
#include "mixknap/instance.hpp"
#include "mixknap/separation.hpp"

namespace mixknap {

// File formats (all indices 0-based):
//   instance: {"h": [..], "a": [..], "p": ..} or
//             {"xi": [..], "pi": [..], "epsilon": ..}
//   query:    {"y": .., "z": [..], "assume_z_in_convP": bool?}
//   cuts:     JSON lines {"alpha": [..], "beta": .., "provenance": ".."}
// Rationals are written "num/den" (plain integers as numbers) and read
// from "num/den" strings, integers, or decimal literals converted exactly
// (0.2 parses as 1/5, not as the nearest double).

Instance load_instance(std::istream& in);
Instance load_instance_file(const std::string& path);

std::string instance_to_json(const Instance& instance);
std::string source_to_json(const ScenarioSource& source);

SeparationQuery load_query(std::istream& in);
SeparationQuery load_query_file(const std::string& path);
std::string query_to_json(const SeparationQuery& query);

/// One cut per line (JSON lines). Lines with an embedded "spec" object
/// round-trip the FdiSpec provenance.
struct CutRecord {
  MixingCut cut;
  std::optional<FdiSpec> spec;
  std::optional<bool> facet_claim;
};

std::vector<CutRecord> load_cuts(std::istream& in);
std::vector<CutRecord> load_cuts_file(const std::string& path);
std::string cut_to_json_line(const CutRecord& record);

std::string result_to_json(const SeparationResult& result,
                           const std::string& method);

std::string hull_to_json(const Instance& instance,
                         const std::vector<HullPoint>& points);

}  // namespace mixknap
