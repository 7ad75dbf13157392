#include "kappa.h"

#include <cstring>
#include <string>

#include "kappa/runner.hpp"

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& msg) { t_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(malloc(s.size() + 1));
  if (out) memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct kappa_config {
  kappa::RunConfig cfg;
};

struct kappa_report {
  kappa::CheckReport rep;
};

extern "C" {

const char* kappa_last_error(void) { return t_last_error.c_str(); }

kappa_config* kappa_config_new(void) {
  t_last_error.clear();
  return new kappa_config();
}

kappa_config* kappa_config_parse(const char* text) {
  t_last_error.clear();
  if (!text) {
    set_error("null spec text");
    return nullptr;
  }
  try {
    auto* c = new kappa_config();
    c->cfg = kappa::parse_spec(text);
    return c;
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

int kappa_config_set(kappa_config* cfg, const char* key, const char* value) {
  t_last_error.clear();
  if (!cfg || !key || !value) {
    set_error("null argument");
    return KAPPA_CONFIG_ERROR;
  }
  try {
    cfg->cfg.set(key, value);
    return KAPPA_OK;
  } catch (const std::exception& e) {
    set_error(e.what());
    return KAPPA_CONFIG_ERROR;
  }
}

int kappa_config_validate(const kappa_config* cfg) {
  t_last_error.clear();
  if (!cfg) {
    set_error("null configuration");
    return KAPPA_CONFIG_ERROR;
  }
  try {
    cfg->cfg.validate();
    return KAPPA_OK;
  } catch (const std::exception& e) {
    set_error(e.what());
    return KAPPA_CONFIG_ERROR;
  }
}

const char* kappa_config_output_path(const kappa_config* cfg) {
  return cfg ? cfg->cfg.output.c_str() : "";
}

void kappa_config_free(kappa_config* cfg) { delete cfg; }

kappa_report* kappa_run(const kappa_config* cfg) {
  t_last_error.clear();
  if (!cfg) {
    set_error("null configuration");
    return nullptr;
  }
  try {
    auto* r = new kappa_report();
    r->rep = kappa::run(cfg->cfg);
    return r;
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

int kappa_report_status(const kappa_report* rep) {
  if (!rep) return KAPPA_CONFIG_ERROR;
  return rep->rep.all_passed() ? KAPPA_OK : KAPPA_CHECK_FAILED;
}

size_t kappa_report_check_count(const kappa_report* rep) {
  return rep ? rep->rep.checks.size() : 0;
}

#define KAPPA_CHECK_AT(rep, i)                                 \
  if (!(rep) || (i) >= (rep)->rep.checks.size()) return nullptr; \
  const kappa::CheckResult& c = (rep)->rep.checks[i];

const char* kappa_report_check_name(const kappa_report* rep, size_t i) {
  KAPPA_CHECK_AT(rep, i)
  return c.name.c_str();
}

const char* kappa_report_check_params(const kappa_report* rep, size_t i) {
  KAPPA_CHECK_AT(rep, i)
  return c.params.c_str();
}

int kappa_report_check_status(const kappa_report* rep, size_t i) {
  if (!rep || i >= rep->rep.checks.size()) return -1;
  switch (rep->rep.checks[i].status) {
    case kappa::CheckStatus::Pass:
      return KAPPA_CHECK_PASS;
    case kappa::CheckStatus::Fail:
      return KAPPA_CHECK_FAIL;
    case kappa::CheckStatus::Skipped:
      return KAPPA_CHECK_SKIPPED;
  }
  return -1;
}

const char* kappa_report_check_detail(const kappa_report* rep, size_t i) {
  KAPPA_CHECK_AT(rep, i)
  return c.detail.c_str();
}

int kappa_report_check_lambda_order(const kappa_report* rep, size_t i) {
  if (!rep || i >= rep->rep.checks.size()) return -1;
  return rep->rep.checks[i].first_bad_lambda_order;
}

double kappa_report_check_wall_ms(const kappa_report* rep, size_t i) {
  if (!rep || i >= rep->rep.checks.size()) return 0;
  return rep->rep.checks[i].wall_ms;
}

char* kappa_report_render_json(const kappa_report* rep) {
  if (!rep) return nullptr;
  return dup_string(rep->rep.to_json());
}

char* kappa_report_render_text(const kappa_report* rep) {
  if (!rep) return nullptr;
  return dup_string(rep->rep.to_text());
}

void kappa_string_free(char* s) { free(s); }

void kappa_report_free(kappa_report* rep) { delete rep; }

}  // extern "C"
