#pragma once

#include <string>
#include <vector>

namespace prismlab {

// Named pass/fail findings collected by the composite checks.
struct Finding {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct Report {
  std::vector<Finding> items;

  void add(std::string name, bool ok, std::string detail = {}) {
    items.push_back({std::move(name), ok, std::move(detail)});
  }
  bool ok() const {
    for (const auto& f : items)
      if (!f.ok) return false;
    return true;
  }
  std::string summary() const {
    std::string s;
    for (const auto& f : items) {
      if (!s.empty()) s += "; ";
      s += f.name + (f.ok ? " ok" : " FAILED");
      if (!f.detail.empty()) s += " (" + f.detail + ")";
    }
    return s;
  }
};

}  // namespace prismlab
