#pragma once

#include "prismlab/ringcore/errors.hpp"
#include "prismlab/ringcore/numbers.hpp"
#include "prismlab/ringcore/report.hpp"
#include "prismlab/ringcore/rng.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prismlab::harness {

constexpr int kSchemaVersion = 1;

// Unset fields fall back to each suite's own defaults, which reproduce the
// acceptance matrix for the acceptance.* suites.
struct SuiteConfig {
  std::string suite = "all";
  std::optional<long> p;
  std::optional<int> n_p, n_q, n_z, L, N_big, trials;
  std::uint64_t seed = 0;

  void validate() const {
    if (p && !is_prime(*p)) throw ConfigError("p must be prime");
    for (const auto& v : {n_p, n_q, n_z, L, N_big, trials})
      if (v && *v < 1) throw ConfigError("precisions and trial counts must be >= 1");
    if (L && *L > 4) throw ConfigError("witt-len must be <= 4");
    if (n_z && *n_z > 16) throw ConfigError("series-order must be <= 16");
    if (N_big && *N_big > 24) throw ConfigError("bigwitt must be <= 24");
    if (n_p && *n_p > 64) throw ConfigError("padic-prec must be <= 64");
    if (n_q && *n_q > 12) throw ConfigError("q-prec must be <= 12");
  }
};

enum class Status { Pass, Fail, Skip };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "skip";
  }
}

struct CheckResult {
  std::string id;
  std::string paper_ref;
  Status status = Status::Pass;
  std::string detail;
  double elapsed = 0;  // seconds
};

struct RunReport {
  std::string suite;
  SuiteConfig cfg;
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (c.status == Status::Fail) return false;
    return true;
  }
  int count(Status s) const {
    int n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ull;
  return h;
}

// Handed to a suite body; collects its checks.
class SuiteRun {
 public:
  SuiteRun(const SuiteConfig& cfg, std::string suite, std::string ref, std::vector<CheckResult>& out)
      : cfg_(cfg), suite_(std::move(suite)), ref_(std::move(ref)), out_(out) {}

  const SuiteConfig& cfg() const { return cfg_; }
  const std::string& id() const { return suite_; }

  std::vector<long> primes(std::vector<long> dflt) const { return cfg_.p ? std::vector<long>{*cfg_.p} : dflt; }
  std::vector<int> lengths(std::vector<int> dflt) const { return cfg_.L ? std::vector<int>{*cfg_.L} : dflt; }
  int trials(int d) const { return cfg_.trials.value_or(d); }
  int n_p(int d) const { return cfg_.n_p.value_or(d); }
  int n_q(int d) const { return cfg_.n_q.value_or(d); }
  int n_z(int d) const { return cfg_.n_z.value_or(d); }
  int N_big(int d) const { return cfg_.N_big.value_or(d); }

  // One stream per check id, so reordering checks changes nothing.
  CounterRng rng(const std::string& name) const { return CounterRng(cfg_.seed, fnv1a(suite_ + "/" + name)); }

  // The body returns a Report; any library error fails the check with its
  // message. ConfigError propagates.
  void check(const std::string& name, const std::function<Report(CounterRng&)>& body, const std::string& ref = {}) {
    CheckResult r;
    r.id = suite_ + "/" + name;
    r.paper_ref = ref.empty() ? ref_ : ref;
    CounterRng g = rng(name);
    auto t0 = std::chrono::steady_clock::now();
    try {
      Report rep = body(g);
      r.status = rep.ok() ? Status::Pass : Status::Fail;
      r.detail = rep.summary();
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      r.status = Status::Fail;
      r.detail = e.what();
    }
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back(std::move(r));
  }

  void skip(const std::string& name, const std::string& why, const std::string& ref = {}) {
    out_.push_back({suite_ + "/" + name, ref.empty() ? ref_ : ref, Status::Skip, why, 0});
  }

 private:
  const SuiteConfig& cfg_;
  std::string suite_, ref_;
  std::vector<CheckResult>& out_;
};

struct Suite {
  std::string id;
  std::string paper_ref;
  std::function<void(SuiteRun&)> body;
};

// Small helpers for suite bodies.
inline std::string tag(long a, long b) { return std::to_string(a) + "/" + std::to_string(b); }
inline std::string at_p(long p) { return "p=" + std::to_string(p); }
inline std::string at_pl(long p, int L) { return at_p(p) + " L=" + std::to_string(L); }

inline Report single(const std::string& name, bool ok, const std::string& detail = {}) {
  Report r;
  r.add(name, ok, detail);
  return r;
}

// Success count over many trials, remembering the first counterexample.
struct Tally {
  std::string name;
  int good = 0, total = 0;
  std::string first;

  explicit Tally(std::string n) : name(std::move(n)) {}
  void add(bool ok, const std::function<std::string()>& what = {}) {
    ++total;
    if (ok) ++good;
    else if (first.empty() && what) first = what();
  }
  void into(Report& r) const {
    std::string d = tag(good, total);
    if (!first.empty()) d += ", first failure at " + first;
    r.add(name, good == total && total > 0, d);
  }
};

}  // namespace prismlab::harness
