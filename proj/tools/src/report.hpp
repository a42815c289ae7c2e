#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "gwtower/big_number.hpp"
#include "gwtower/budget.hpp"

namespace gwt::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// Everything that determines a report body. Wall-clock time is written to
// stderr instead, so reruns of the same manifest are byte-identical.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  std::uint64_t seed = 0;
  Budgets budgets;
  std::string version = kToolVersion;
  std::string input_digest;  // "fnv1a64:<hex>"
};

struct Report {
  RunManifest manifest;
  Json inputs = Json::object();
  Json verdicts = Json::array();
  Json evidence = Json::array();
  Json error;  // null unless the command failed

  void verdict(std::string name, std::string status, std::string detail = {});
  void add_evidence(Json item) { evidence.push_back(std::move(item)); }
};

std::string fnv1a64_hex(std::string_view data);

Json to_json(const Report& r);
// Indented "key: value" lines.
std::string render_text(const Report& r);
// Pretty-printed JSON.
std::string render_structured(const Report& r);

Json big_json(const BigInt& x);
// Expression, digit count and, when short, the decimal value.
Json big_number_json(const BigNumber& x);

}  // namespace gwt::cli
