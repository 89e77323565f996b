#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace confbetti {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Ordered list of named pass/fail results; details are kept only for failures.
struct CheckReport {
  std::vector<CheckResult> results;

  bool passed() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    results.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  }
  void append(const CheckReport& other) { results.insert(results.end(), other.results.begin(), other.results.end()); }
};

}  // namespace confbetti
