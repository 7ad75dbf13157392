#include "kappa/report.hpp"

#include <json.hpp>

namespace kappa {

CheckResult run_check(const std::string& name, const std::string& params,
                      const std::function<bool(std::string* detail,
                                               int* bad_order)>& body) {
  CheckResult r;
  r.name = name;
  r.params = params;
  auto t0 = std::chrono::steady_clock::now();
  try {
    std::string detail;
    int bad = -1;
    bool ok = body(&detail, &bad);
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = detail;
    r.first_bad_lambda_order = bad;
  } catch (const std::exception& e) {
    r.status = CheckStatus::Fail;
    r.detail = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

CheckResult skipped_check(const std::string& name, const std::string& params,
                          const std::string& why) {
  CheckResult r;
  r.name = name;
  r.params = params;
  r.status = CheckStatus::Skipped;
  r.detail = why;
  return r;
}

bool CheckReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

int CheckReport::count(CheckStatus s) const {
  int k = 0;
  for (const auto& c : checks)
    if (c.status == s) ++k;
  return k;
}

namespace {

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

}  // namespace

std::string CheckReport::to_json() const {
  nlohmann::ordered_json body;
  body["schema_version"] = schema_version;
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : config_echo) cfg[k] = v;
  body["config"] = cfg;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["parameters"] = c.params;
    jc["status"] = status_str(c.status);
    if (!c.detail.empty()) jc["detail"] = c.detail;
    if (c.first_bad_lambda_order >= 0)
      jc["first_failing_lambda_order"] = c.first_bad_lambda_order;
    arr.push_back(jc);
  }
  body["checks"] = arr;
  body["summary"] = {{"pass", count(CheckStatus::Pass)},
                     {"fail", count(CheckStatus::Fail)},
                     {"skipped", count(CheckStatus::Skipped)},
                     {"overall", all_passed() ? "pass" : "fail"}};

  nlohmann::ordered_json header;
  header["generated_at"] = generated_at;
  nlohmann::ordered_json times = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    times.push_back({{"name", c.name}, {"wall_ms", c.wall_ms}});
  header["wall_times"] = times;

  nlohmann::ordered_json doc;
  doc["header"] = header;
  doc["body"] = body;
  return doc.dump(2) + "\n";
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    std::string line;
    switch (c.status) {
      case CheckStatus::Pass:
        line = "[PASS] ";
        break;
      case CheckStatus::Fail:
        line = "[FAIL] ";
        break;
      case CheckStatus::Skipped:
        line = "[SKIP] ";
        break;
    }
    line += c.name;
    if (!c.params.empty()) line += " (" + c.params + ")";
    if (c.status != CheckStatus::Pass && !c.detail.empty())
      line += "\n       " + c.detail;
    if (c.first_bad_lambda_order >= 0 && c.status == CheckStatus::Fail)
      line += "\n       first failing lam order: " +
              std::to_string(c.first_bad_lambda_order);
    char buf[32];
    snprintf(buf, sizeof(buf), " [%.1fms]", c.wall_ms);
    if (c.status != CheckStatus::Skipped) line += buf;
    out += line + "\n";
  }
  out += "overall: " + std::string(all_passed() ? "PASS" : "FAIL") + " (" +
         std::to_string(count(CheckStatus::Pass)) + " passed, " +
         std::to_string(count(CheckStatus::Fail)) + " failed, " +
         std::to_string(count(CheckStatus::Skipped)) + " skipped)\n";
  return out;
}

}  // namespace kappa
