#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfuzz {

/// Outcome of one named law/axiom check. A failing check always carries a
/// witness describing the first counterexample found.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;     // empty iff passed
  bool exhaustive = true;  // false when the quantifier space was sampled
};

/// Collects per-law results for one validated subject (a lattice, a
/// partition, a morphism, a proposition suite, ...). Failures are report
/// content, not errors.
class ValidationReport {
 public:
  ValidationReport() = default;
  explicit ValidationReport(std::string subject) : subject_(std::move(subject)) {}

  void record(std::string name, bool ok, std::string witness = {}, bool exhaustive = true) {
    if (ok) witness.clear();
    checks_.push_back({std::move(name), ok, std::move(witness), exhaustive});
  }

  /// Appends every check of `sub`, prefixing names with its subject.
  void absorb(const ValidationReport& sub) {
    for (const auto& c : sub.checks_) {
      std::string name = sub.subject_.empty() ? c.name : sub.subject_ + ": " + c.name;
      checks_.push_back({std::move(name), c.passed, c.witness, c.exhaustive});
    }
  }

  bool passed() const {
    for (const auto& c : checks_) {
      if (!c.passed) return false;
    }
    return true;
  }

  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& c : checks_) {
      if (!c.passed) ++n;
    }
    return n;
  }

  bool exhaustive() const {
    for (const auto& c : checks_) {
      if (!c.exhaustive) return false;
    }
    return true;
  }

  /// First failing check, or nullptr when everything passed.
  const CheckResult* first_failure() const {
    for (const auto& c : checks_) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::string& subject() const { return subject_; }

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
};

/// Thrown when an exhaustive quantifier would exceed the configured budget
/// and sampling was not requested.
class QuantifierBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by the crisp/relational translations when a relation pair is not
/// crisp in the required sense; the message names the offending row/column.
class CrispnessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lfuzz
