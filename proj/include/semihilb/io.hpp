#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "semihilb/fuzz.hpp"
#include "semihilb/inequalities.hpp"

namespace semihilb {

using Json = nlohmann::ordered_json;

/// {"name", "rows", "cols", "data": [[[re, im], ...], ...]}; throws ParseError.
Json matrix_to_json(const CMatrix& m, const std::string& name = "");
CMatrix matrix_from_json(const Json& j);

CMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const CMatrix& m, const std::string& name = "");

Json params_to_json(const BoundParams& p);
BoundParams params_from_json(const Json& j);
Json report_to_json(const BoundReport& r);

Json case_to_json(const CaseRecord& c);
CaseRecord case_from_json(const Json& j);
Json campaign_to_json(const CampaignReport& c);
CampaignReport campaign_from_json(const Json& j);
Json campaigns_to_json(const std::vector<CampaignReport>& reports);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace semihilb
