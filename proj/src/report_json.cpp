#include "permpat/report_json.hpp"

namespace permpat {

using nlohmann::json;

json to_json(const CountRecord& rec) {
  return {{"n", rec.n},
          {"pattern", to_string(rec.pattern)},
          {"alternating", rec.alternating_only},
          {"count", rec.count},
          {"method", to_string(rec.method)}};
}

CountRecord count_record_from_json(const json& j) {
  return {j.at("n").get<int>(), parse_permutation(j.at("pattern").get<std::string>()),
          j.at("alternating").get<bool>(), j.at("count").get<Count>(),
          count_method_from_string(j.at("method").get<std::string>())};
}

json to_json(const VerificationReport& report) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back({{"perm", to_string(w.perm)}, {"k", w.k}, {"note", w.note}});
  json table = json::array();
  for (const auto& row : report.counts_table) {
    json r{{"left", to_json(row.left)}, {"right", to_json(row.right)}};
    if (row.last_entry_rank) r["last_entry_rank"] = *row.last_entry_rank;
    table.push_back(std::move(r));
  }
  return {{"claim", to_string(report.claim)},
          {"parameters", {{"n_min", report.n_range.min}, {"n_max", report.n_range.max}, {"k", report.k_set}}},
          {"status", to_string(report.status)},
          {"exploratory", report.exploratory},
          {"instances", report.instances},
          {"witnesses", std::move(witnesses)},
          {"counts_table", std::move(table)},
          {"notes", report.notes}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.claim = claim_from_string(j.at("claim").get<std::string>());
  const auto& params = j.at("parameters");
  r.n_range = {params.at("n_min").get<int>(), params.at("n_max").get<int>()};
  r.k_set = params.at("k").get<std::vector<int>>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.exploratory = j.at("exploratory").get<bool>();
  r.instances = j.at("instances").get<Count>();
  for (const auto& w : j.at("witnesses"))
    r.witnesses.push_back({parse_permutation(w.at("perm").get<std::string>()), w.at("k").get<int>(),
                           w.at("note").get<std::string>()});
  for (const auto& row : j.at("counts_table")) {
    CountRow cr{count_record_from_json(row.at("left")), count_record_from_json(row.at("right")), std::nullopt};
    if (row.contains("last_entry_rank")) cr.last_entry_rank = row.at("last_entry_rank").get<Count>();
    r.counts_table.push_back(std::move(cr));
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string render_reports_json(const std::vector<VerificationReport>& reports, int indent) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(indent);
}

std::vector<VerificationReport> parse_reports_json(const std::string& text) {
  std::vector<VerificationReport> out;
  for (const auto& j : json::parse(text)) out.push_back(report_from_json(j));
  return out;
}

}  // namespace permpat
