#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ppers {

/// Outcome of a property verifier. Failures are recorded, never thrown.
struct VerificationReport {
  explicit VerificationReport(std::string report_name = {}) : name(std::move(report_name)) {}

  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Checks that were not applicable to a generated instance.
  std::size_t skipped = 0;
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }

  void check(bool condition, const std::string& what) {
    if (condition) {
      ++passed;
    } else {
      ++failed;
      if (failures.size() < 20) failures.push_back(what);
    }
  }

  void merge(const VerificationReport& other) {
    passed += other.passed;
    failed += other.failed;
    skipped += other.skipped;
    for (const auto& f : other.failures)
      if (failures.size() < 20) failures.push_back(f);
  }
};

}  // namespace ppers
