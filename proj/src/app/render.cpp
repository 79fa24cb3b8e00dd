#include "permpat/app/render.hpp"

#include <sstream>
#include <stdexcept>

#include "permpat/report_json.hpp"

namespace permpat::app {

namespace {

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : '"' + s + '"';
}

std::string csv_row(const CountRecord& rec) {
  return std::to_string(rec.n) + ',' + csv_field(to_string(rec.pattern)) + ',' +
         (rec.alternating_only ? "1" : "0") + ',' + std::to_string(rec.count) + ',' +
         to_string(rec.method);
}

std::string positions(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

}  // namespace

Format format_from_string(std::string_view s) {
  if (s == "plain") return Format::plain;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

std::string render_count(const CountRecord& rec, Format f) {
  switch (f) {
    case Format::plain: return std::to_string(rec.count) + '\n';
    case Format::csv: return std::string(kCountCsvHeader) + '\n' + csv_row(rec) + '\n';
    case Format::json: return to_json(rec).dump() + '\n';
  }
  return {};
}

std::string render_table(const std::vector<CountRecord>& rows, Format f) {
  std::string out;
  switch (f) {
    case Format::plain:
      for (const auto& r : rows) out += std::to_string(r.n) + ' ' + std::to_string(r.count) + '\n';
      break;
    case Format::csv:
      out = std::string(kCountCsvHeader) + '\n';
      for (const auto& r : rows) out += csv_row(r) + '\n';
      break;
    case Format::json: {
      auto arr = nlohmann::json::array();
      for (const auto& r : rows) arr.push_back(to_json(r));
      out = arr.dump() + '\n';
      break;
    }
  }
  return out;
}

std::string render_map(const BijectionResult& result, bool with_trace) {
  std::string out = to_string(result.image) + '\n';
  if (!with_trace) return out;
  const auto& t = result.trace;
  out += "positions " + positions(t.moved_positions) + '\n';
  std::string values = "{";
  for (std::size_t i = 0; i < t.moved_values.size(); ++i)
    values += (i ? "," : "") + std::to_string(t.moved_values[i]);
  out += "values " + values + "}\n";
  out += "fill";
  for (auto [pos, v] : t.assignments) out += ' ' + std::to_string(pos) + "<-" + std::to_string(v);
  return out + '\n';
}

std::string render_reports(const std::vector<VerificationReport>& reports, Format f) {
  if (f == Format::json) return render_reports_json(reports) + '\n';
  if (f == Format::csv) throw std::invalid_argument("verify supports json or plain output");
  std::ostringstream os;
  for (const auto& r : reports) {
    os << to_string(r.claim) << ": " << to_string(r.status);
    if (r.exploratory) os << " (exploratory)";
    os << "  n=" << r.n_range.min << ".." << r.n_range.max << " k=";
    for (std::size_t i = 0; i < r.k_set.size(); ++i) os << (i ? "," : "") << r.k_set[i];
    os << "  instances=" << r.instances << '\n';
    for (const auto& row : r.counts_table) {
      os << "  n=" << row.left.n << "  " << to_string(row.left.pattern) << ": " << row.left.count << "  "
         << to_string(row.right.pattern) << ": " << row.right.count;
      if (row.last_entry_rank) os << "  last-entry-rank: " << *row.last_entry_rank;
      os << '\n';
    }
    for (const auto& w : r.witnesses) os << "  witness " << to_string(w.perm) << " k=" << w.k << "  " << w.note << '\n';
    for (const auto& n : r.notes) os << "  note: " << n << '\n';
  }
  return os.str();
}

std::string render_oeis(const std::vector<OeisMatch>& matches, const std::vector<Count>& terms) {
  std::string out = "terms " + join_terms(terms) + '\n';
  if (matches.empty()) return out + "no matches\n";
  for (const auto& m : matches)
    out += m.sequence_id + "  prefix=" + std::to_string(m.matched_prefix_length) + "  " + m.name + '\n';
  return out;
}

}  // namespace permpat::app
