#pragma once

#include "clog/bridge.hpp"
#include "clog/engine.hpp"
#include "clog/structure.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace clog {

using json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path);

// {"domain": [...], "created": [...], "predicates": {name: [[tuple], ...]}}.
// Tuple entries may be strings or integers; unknown names become initial
// elements. An empty list is the same as omitting the predicate; the theory
// declares it. An optional "constants" object binds constant symbols to
// elements, e.g. {"D": 2}.
Structure structure_from_json(const json& j);
Structure load_structure(const std::filesystem::path& path);
json structure_to_json(const Structure& s);

// Models are printed as sorted atom lists plus their domain.
json model_to_json(const Structure& s);
std::string model_to_text(const Structure& s);

json to_json(const ModelSet& m);
json models_to_json(const std::vector<Structure>& models);
json to_json(const ProcessTrace& t);
json to_json(const ModelVerdict& v);
json to_json(const CSetEnumeration& e);
json to_json(const AnalysisReport& r);
json to_json(const ComparisonReport& r);

std::string to_text(const ModelSet& m);
std::string to_text(const ProcessTrace& t);
std::string to_text(const ModelVerdict& v);
std::string to_text(const AnalysisReport& r);
std::string to_text(const ComparisonReport& r);
std::string to_dot(const ProcessTrace& t);

} // namespace clog
