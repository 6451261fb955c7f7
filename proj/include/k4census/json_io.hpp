#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "k4census/bounds.hpp"
#include "k4census/census.hpp"
#include "k4census/constructions.hpp"
#include "k4census/identities.hpp"
#include "k4census/search.hpp"

// Every integer is written as a decimal string and every rational as
// {"num": "...", "den": "..."} so no consumer truncates to 64 bits.
namespace k4c::io {

nlohmann::json rational(const mpq_class& v);
mpq_class parse_rational(const nlohmann::json& j);

nlohmann::json to_json(const CensusRecord& r);
nlohmann::json to_json(const VertexTriangleProfile& p);
nlohmann::json to_json(const IdentityCertificate& c);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const BlowupOptimum& o);

/// {"parts": [...], "n": "...", "t4_closed_form": "..."}
nlohmann::json construction_json(const BlowupSpec& spec);

/// Header row plus one row per p; comma separated, LF line endings.
std::string ratio_csv(const std::vector<RatioRow>& rows);
std::string bound_csv(const std::vector<BoundReport>& reports);

}  // namespace k4c::io
