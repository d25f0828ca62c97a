#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "symquot/classify.hpp"

namespace symquot {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "symquot/1";

Json to_json(const HypothesisReport& h);
Json to_json(const TripleParams& p);
Json to_json(const ClassificationVerdict& v);  // includes the top-level schema field
Json to_json(const IncidenceStructure& d);     // {v, blocks}
Json graph_json(const Graph& g);               // {vertices, edges}
Json summary_json(const Triple& t);
Json census_json(const std::vector<CensusRow>& rows);

// Aligned plain-text renderings.
std::string table(const std::vector<std::vector<std::string>>& rows);  // first row is the header
std::string summary_text(const Triple& t);
std::string params_text(const TripleParams& p);
std::string verdict_text(const ClassificationVerdict& v);
std::string census_text(const std::vector<CensusRow>& rows);

}  // namespace symquot
