#pragma once

#include <string>
#include <vector>

namespace isokit {

// One violated law with a human-readable witness.
struct Issue {
  std::string law;
  std::string detail;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const { return issues.empty(); }
  void add(std::string law, std::string detail) {
    issues.push_back({std::move(law), std::move(detail)});
  }
  void merge(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  }
};

}  // namespace isokit
