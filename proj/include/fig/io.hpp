#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "fig/campaign.hpp"
#include "fig/oracle.hpp"

namespace fig {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the line or the offending field.
struct ParseError : Error {
  using Error::Error;
};

std::string read_file(const std::filesystem::path& path);
/// Parses JSON text; syntax errors report line and column.
Json parse_json(const std::string& text, const std::string& source);

Json to_json(const Field& f);
Json to_json(const FiniteGroup& g);
Json to_json(const Degree& d);
Json to_json(const Matrix& m);  // rows of decimal strings
Json to_json(const Presentation& p);
Json to_json(const FreeMap& phi);
Json to_json(const CampaignConfig& cfg);
Json to_json(const DegreeReport& r);
Json to_json(const FilteredResult& f);
Json to_json(const FilteredShift& s);
Json to_json(const SyzygyWitness& w);
Json to_json(const Stabilization& s);
Json to_json(const Module& v);
Json to_json(const OracleReport& r);
Json to_json(const CampaignReport& r);

Presentation presentation_from_json(const Json& j);
FreeMap free_map_from_json(const Json& j);
/// Missing keys keep their defaults; unknown keys are rejected.
CampaignConfig config_from_json(const Json& j);

/// Two-space indented, newline-terminated.
std::string dump(const Json& j);

/// check,pass,fail,inconclusive per check name, then a total row.
std::string summary_csv(const CampaignReport& r);

}  // namespace fig
