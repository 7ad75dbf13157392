#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace kappa {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  std::string params;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // residual or reason, canonical text form
  int first_bad_lambda_order = -1;
  double wall_ms = 0;
};

// Runs body() (returning pass/fail plus detail via out-params), recording
// wall time. Exceptions become failures with the message as detail.
CheckResult run_check(const std::string& name, const std::string& params,
                      const std::function<bool(std::string* detail,
                                               int* bad_order)>& body);

CheckResult skipped_check(const std::string& name, const std::string& params,
                          const std::string& why);

struct CheckReport {
  int schema_version = 1;
  std::string generated_at;  // header only; not part of the canonical body
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  int count(CheckStatus s) const;

  // Deterministic body (config echo + checks, no timings) plus a header
  // carrying timestamps and wall times.
  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace kappa
