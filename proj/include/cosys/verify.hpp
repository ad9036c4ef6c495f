#pragma once

#include <string>
#include <vector>

namespace cosys {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  long elapsed_ms = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool overall() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// suite: values | monotonicity | census | lemmaG7 | all. Throws UnknownName.
VerificationReport run_suite(const std::string& suite);

std::string report_text(const VerificationReport& r);

}  // namespace cosys
