#pragma once

#include <string>
#include <vector>

namespace homat {

// Outcome of a validation pass. Checks are report-valued rather than
// throwing so callers can inspect or print every recorded violation.
struct Violation {
  std::string rule;    // short machine-readable rule name
  std::string detail;  // human-readable location and value
};

struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string rule, std::string detail) {
    violations.push_back({std::move(rule), std::move(detail)});
  }
};

}  // namespace homat
