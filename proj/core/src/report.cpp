#include "runyon/report.hpp"

#include <sstream>

namespace runyon {

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Mismatch: return "mismatch";
  }
  return "?";
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const auto& c : cases) {
    ++s.total;
    switch (c.status) {
      case CaseStatus::Pass: ++s.pass; break;
      case CaseStatus::Fail: ++s.fail; break;
      case CaseStatus::Mismatch: ++s.mismatch; break;
    }
  }
  return s;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json out;
  out["suite"] = suite;
  out["asserted"] = asserted;
  auto& arr = out["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    arr.push_back({{"id", c.id}, {"params", c.params}, {"status", to_string(c.status)}, {"witness", c.witness}});
  }
  if (!findings.empty()) {
    out["findings"] = findings;
  }
  const auto s = summary();
  out["summary"] = {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"mismatch", s.mismatch}};
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  const auto s = summary();
  os << "suite " << suite << (asserted ? "" : " (report-only)") << ": " << s.pass << "/" << s.total << " pass";
  if (s.fail > 0) os << ", " << s.fail << " fail";
  if (s.mismatch > 0) os << ", " << s.mismatch << " mismatch";
  os << "\n";
  for (const auto& c : cases) {
    if (c.status == CaseStatus::Pass) continue;
    os << "  " << to_string(c.status) << "  " << c.id << " " << c.params.dump();
    if (!c.witness.empty()) os << "  " << c.witness;
    os << "\n";
  }
  for (const auto& f : findings) {
    os << "  finding: " << f << "\n";
  }
  return os.str();
}

}  // namespace runyon
