#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "permpat/enumeration.hpp"

namespace permpat::app {

inline constexpr std::size_t kDefaultMinPrefix = 5;
inline constexpr const char* kOeisUrlEnvVar = "PERMPAT_OEIS_URL";

struct OeisMatch {
  std::string sequence_id;  // "A000108"
  std::string name;
  std::size_t matched_prefix_length = 0;
};

/// The service could not be reached or answered with an error. Distinct from
/// an empty result.
class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Source of raw OEIS search responses (the JSON body for a term list).
class OeisClient {
 public:
  virtual ~OeisClient() = default;
  virtual std::string fetch(const std::vector<Count>& terms) = 0;
};

/// Queries https://oeis.org/search?q=<terms>&fmt=json, or the base URL in
/// $PERMPAT_OEIS_URL.
class HttpOeisClient : public OeisClient {
 public:
  explicit HttpOeisClient(std::string base_url = default_base_url());
  static std::string default_base_url();
  std::string fetch(const std::vector<Count>& terms) override;

 private:
  std::string base_url_;
};

/// Canned responses: <dir>/<t1,t2,...>.json. A missing file reads as no
/// results. Never touches the network.
class FixtureOeisClient : public OeisClient {
 public:
  explicit FixtureOeisClient(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::string fetch(const std::vector<Count>& terms) override;

 private:
  std::filesystem::path dir_;
};

std::string join_terms(const std::vector<Count>& terms);

/// Longest m such that terms[0..m) appears contiguously in `data`.
std::size_t matched_prefix_length(const std::vector<Count>& terms, const std::vector<Count>& data);

/// Accepts both response shapes the search endpoint has used: a bare array
/// of results, or an object with a "results" member. null means no results.
std::vector<OeisMatch> parse_oeis_response(const std::string& body, const std::vector<Count>& terms,
                                           std::size_t min_prefix = kDefaultMinPrefix);

std::vector<OeisMatch> lookup_oeis(OeisClient& client, const std::vector<Count>& terms,
                                   std::size_t min_prefix = kDefaultMinPrefix);

}  // namespace permpat::app
