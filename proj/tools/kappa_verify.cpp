// kappa-verify: runs the exact symbolic check suites for the kappa-deformed
// Poincare/Weyl group and algebra over a configured metric, through the C
// library interface.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kappa.h"

namespace {

int config_error(const std::string& what) {
  fprintf(stderr, "error: %s\n", what.c_str());
  return KAPPA_CONFIG_ERROR;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kappa-verify - exact checker for kappa-deformed Poincare/Weyl "
      "structures"};

  std::string spec_path, metric, deformation, layer, output, json_path;
  std::string n_str, order_str, degree_str, samples_str, seed_str;
  bool quiet = false;

  app.add_option("--spec", spec_path, "spec file (key = value lines)");
  app.add_option("--n", n_str, "space-time dimension");
  app.add_option("--metric", metric,
                 "metric matrix, e.g. [[0,1],[1,0]] (entries p/q)");
  app.add_option("--deformation", deformation, "poincare | weyl");
  app.add_option("--layer", layer,
                 "classical | group | algebra | duality | all");
  app.add_option("--order", order_str, "series truncation order (default 4)");
  app.add_option("--degree", degree_str, "pairing degree cap (default 3)");
  app.add_option("--samples", samples_str,
                 "random-metric sample count (default 20)");
  app.add_option("--seed", seed_str, "random seed (default 0)");
  app.add_option("--output", output, "report file path (JSON)");
  app.add_option("--json", json_path, "report file path (overrides --output)");
  app.add_flag("--quiet", quiet, "suppress per-check output");

  CLI11_PARSE(app, argc, argv);

  kappa_config* cfg = nullptr;
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    if (!in) return config_error("cannot open spec file: " + spec_path);
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = kappa_config_parse(ss.str().c_str());
    if (!cfg) return config_error(kappa_last_error());
  } else {
    cfg = kappa_config_new();
  }

  // flags override file values
  const std::pair<const char*, std::string*> overrides[] = {
      {"n", &n_str},           {"metric", &metric},
      {"deformation", &deformation}, {"layer", &layer},
      {"order", &order_str},   {"degree", &degree_str},
      {"samples", &samples_str}, {"seed", &seed_str},
      {"output", &output},
  };
  for (const auto& [key, val] : overrides) {
    if (val->empty()) continue;
    if (kappa_config_set(cfg, key, val->c_str()) != KAPPA_OK) {
      std::string err = kappa_last_error();
      kappa_config_free(cfg);
      return config_error(err);
    }
  }
  // default n from the metric row count
  if (n_str.empty() && !metric.empty()) {
    int rows = 0;
    int depth = 0;
    for (char ch : metric) {
      if (ch == '[') ++depth;
      if (ch == ']' && depth-- == 2) ++rows;
    }
    if (rows > 0)
      kappa_config_set(cfg, "n", std::to_string(rows).c_str());
  }

  if (kappa_config_validate(cfg) != KAPPA_OK) {
    std::string err = kappa_last_error();
    kappa_config_free(cfg);
    return config_error(err);
  }

  kappa_report* rep = kappa_run(cfg);
  if (!rep) {
    std::string err = kappa_last_error();
    kappa_config_free(cfg);
    return config_error(err);
  }

  if (!quiet) {
    char* text = kappa_report_render_text(rep);
    if (text) {
      fputs(text, stdout);
      kappa_string_free(text);
    }
  }

  std::string report_path = !json_path.empty()
                                ? json_path
                                : std::string(kappa_config_output_path(cfg));
  int status = kappa_report_status(rep);
  if (!report_path.empty()) {
    char* json = kappa_report_render_json(rep);
    std::ofstream out(report_path);
    if (!out || !json) {
      if (json) kappa_string_free(json);
      kappa_report_free(rep);
      kappa_config_free(cfg);
      return config_error("cannot write report to " + report_path);
    }
    out << json;
    kappa_string_free(json);
  }

  kappa_report_free(rep);
  kappa_config_free(cfg);
  return status;
}
