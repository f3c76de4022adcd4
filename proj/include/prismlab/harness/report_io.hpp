#pragma once

#include "harness.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace prismlab::harness {

inline nlohmann::ordered_json params_json(const SuiteConfig& c) {
  nlohmann::ordered_json j;
  auto put = [&](const char* k, const auto& v) {
    if (v) j[k] = *v;
    else j[k] = nullptr;  // suite default
  };
  put("p", c.p);
  put("padic_prec", c.n_p);
  put("q_prec", c.n_q);
  put("series_order", c.n_z);
  put("witt_len", c.L);
  put("bigwitt", c.N_big);
  put("trials", c.trials);
  j["seed"] = c.seed;
  return j;
}

// with_elapsed = false gives the byte-stable form used for determinism checks.
inline nlohmann::ordered_json to_json(const RunReport& r, bool with_elapsed = true) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = r.suite;
  j["params"] = params_json(r.cfg);
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["paper_ref"] = c.paper_ref;
    e["status"] = status_name(c.status);
    e["detail"] = c.detail;
    if (with_elapsed) e["elapsed"] = c.elapsed;
    j["checks"].push_back(e);
  }
  j["summary"] = {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"skip", r.count(Status::Skip)}};
  return j;
}

inline std::string to_text(const RunReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.0f ms", c.elapsed * 1000);
    std::string st = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
    out += st + "  " + c.id + "  [" + ms + "]  " + c.detail + "\n";
  }
  out += std::to_string(r.count(Status::Pass)) + " passed, " + std::to_string(r.count(Status::Fail)) + " failed, " +
         std::to_string(r.count(Status::Skip)) + " skipped\n";
  return out;
}

}  // namespace prismlab::harness
