#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "permpat/enumeration.hpp"
#include "permpat/verify.hpp"

namespace permpat {

// Reports and count records as JSON. Permutations are written in their text
// form ("2413", or "10,2,..." beyond n = 9).

nlohmann::json to_json(const CountRecord& rec);
CountRecord count_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

std::string render_reports_json(const std::vector<VerificationReport>& reports, int indent = 2);
std::vector<VerificationReport> parse_reports_json(const std::string& text);

}  // namespace permpat
