#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace pmfa {

/// One estimate-versus-theory record. `pass` is present only when both a
/// ground-truth value and a tolerance are configured.
struct CheckRecord {
  std::string name;
  double estimate = 0.0;
  std::optional<double> truth;
  std::optional<double> tolerance;
  std::optional<bool> pass;
  std::string detail;
};

struct Report {
  std::vector<CheckRecord> checks;
  nlohmann::json estimates;
  nlohmann::json provenance;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// FNV-1a hash of the canonical config dump, recorded as provenance.
std::string config_hash(const nlohmann::json& config);

}  // namespace pmfa
