#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permpat/app/oeis.hpp"
#include "permpat/bijections.hpp"
#include "permpat/enumeration.hpp"
#include "permpat/verify.hpp"

namespace permpat::app {

enum class Format { plain, csv, json };

Format format_from_string(std::string_view s);

inline constexpr const char* kCountCsvHeader = "n,pattern,alternating,count,method";

std::string render_count(const CountRecord& rec, Format f);
std::string render_table(const std::vector<CountRecord>& rows, Format f);
std::string render_map(const BijectionResult& result, bool with_trace);
std::string render_reports(const std::vector<VerificationReport>& reports, Format f);
std::string render_oeis(const std::vector<OeisMatch>& matches, const std::vector<Count>& terms);

}  // namespace permpat::app
