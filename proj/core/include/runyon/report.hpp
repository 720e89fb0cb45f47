#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace runyon {

enum class CaseStatus {
  Pass,
  Fail,
  /// A report-only comparison came out unequal. Never a failure.
  Mismatch,
};

std::string to_string(CaseStatus s);

struct CaseRecord {
  std::string id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  CaseStatus status = CaseStatus::Pass;
  /// First differing coefficient or value; empty on pass.
  std::string witness;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t mismatch = 0;
};

struct VerificationReport {
  std::string suite;
  /// Report-only suites record findings but never fail a run.
  bool asserted = true;
  std::vector<CaseRecord> cases;
  /// Free-form observations attached by report-only suites.
  std::vector<std::string> findings;

  ReportSummary summary() const;
  bool passed() const { return summary().fail == 0; }

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

}  // namespace runyon
