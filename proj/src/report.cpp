#include "pmfa/report.hpp"

#include <cstdint>
#include <cstdio>

#include "pmfa/io.hpp"

namespace pmfa {

bool Report::all_pass() const {
  for (const auto& c : checks) {
    if (c.pass && !*c.pass) return false;
  }
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = "report-1";
  j["provenance"] = provenance;
  j["estimates"] = estimates;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json r;
    r["name"] = c.name;
    r["estimate"] = io::number_or_sentinel(c.estimate);
    if (c.truth) r["truth"] = io::number_or_sentinel(*c.truth);
    if (c.tolerance) r["tolerance"] = *c.tolerance;
    if (c.pass) r["pass"] = *c.pass;
    if (!c.detail.empty()) r["detail"] = c.detail;
    arr.push_back(r);
  }
  j["checks"] = arr;
  j["pass"] = all_pass();
  return j;
}

std::string config_hash(const nlohmann::json& config) {
  const std::string dump = config.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pmfa
