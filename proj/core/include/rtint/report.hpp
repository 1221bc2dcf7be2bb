#pragma once

#include <string>
#include <vector>

namespace rtint {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named list of pass/fail checks produced by the verify_* operations.
struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(const Report& other) {
    for (const auto& c : other.checks) checks.push_back({other.title + ": " + c.name, c.passed, c.detail});
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::string to_text() const;
};

}  // namespace rtint
