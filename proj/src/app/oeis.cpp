#include "permpat/app/oeis.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

namespace permpat::app {

std::string join_terms(const std::vector<Count>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(terms[i]);
  }
  return out;
}

HttpOeisClient::HttpOeisClient(std::string base_url) : base_url_(std::move(base_url)) {}

std::string HttpOeisClient::default_base_url() {
  if (const char* env = std::getenv(kOeisUrlEnvVar); env && *env) return env;
  return "https://oeis.org";
}

std::string HttpOeisClient::fetch(const std::vector<Count>& terms) {
  httplib::Client client(base_url_);
  client.set_connection_timeout(10);
  client.set_read_timeout(20);
  client.set_follow_location(true);
  const std::string path = "/search?fmt=json&q=" + httplib::detail::encode_query_param(join_terms(terms));
  auto res = client.Get(path);
  if (!res) throw NetworkError("OEIS request to " + base_url_ + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw NetworkError("OEIS request to " + base_url_ + " returned HTTP " + std::to_string(res->status));
  return res->body;
}

std::string FixtureOeisClient::fetch(const std::vector<Count>& terms) {
  std::ifstream in(dir_ / (join_terms(terms) + ".json"));
  if (!in) return "null";
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t matched_prefix_length(const std::vector<Count>& terms, const std::vector<Count>& data) {
  std::size_t best = 0;
  for (std::size_t off = 0; off < data.size(); ++off) {
    std::size_t m = 0;
    while (m < terms.size() && off + m < data.size() && data[off + m] == terms[m]) ++m;
    best = std::max(best, m);
  }
  return best;
}

namespace {

std::vector<Count> parse_data(const std::string& data) {
  std::vector<Count> out;
  std::size_t pos = 0;
  while (pos < data.size()) {
    auto comma = data.find(',', pos);
    if (comma == std::string::npos) comma = data.size();
    Count v = 0;
    const auto [end, ec] = std::from_chars(data.data() + pos, data.data() + comma, v);
    // Negative or oversized terms cannot match a count; stop there.
    if (ec != std::errc{} || end != data.data() + comma) break;
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::string a_number(const nlohmann::json& r) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "A%06lld", r.at("number").get<long long>());
  return buf;
}

}  // namespace

std::vector<OeisMatch> parse_oeis_response(const std::string& body, const std::vector<Count>& terms,
                                           std::size_t min_prefix) {
  const auto doc = nlohmann::json::parse(body);
  const nlohmann::json* results = &doc;
  if (doc.is_object()) {
    if (!doc.contains("results")) return {};
    results = &doc.at("results");
  }
  std::vector<OeisMatch> out;
  if (!results->is_array()) return out;
  for (const auto& r : *results) {
    const auto data = parse_data(r.value("data", std::string{}));
    const auto m = matched_prefix_length(terms, data);
    if (m < min_prefix) continue;
    out.push_back({a_number(r), r.value("name", std::string{}), m});
  }
  return out;
}

std::vector<OeisMatch> lookup_oeis(OeisClient& client, const std::vector<Count>& terms, std::size_t min_prefix) {
  const auto body = client.fetch(terms);
  try {
    return parse_oeis_response(body, terms, min_prefix);
  } catch (const nlohmann::json::exception& e) {
    throw NetworkError(std::string("malformed OEIS response: ") + e.what());
  }
}

}  // namespace permpat::app
