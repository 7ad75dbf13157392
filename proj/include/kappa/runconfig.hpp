#pragma once

#include "kappa/poisson.hpp"

namespace kappa {

// Run configuration: deformation kind, metric, which check layers to run,
// truncation order, pairing degree cap, random-metric sample count and seed.
struct RunConfig {
  enum class Layer { Classical, Group, Algebra, Duality, All };

  int n = 0;
  std::vector<std::vector<Rational>> metric_entries;
  GroupKind deformation = GroupKind::Poincare;
  Layer layer = Layer::All;
  int order = 4;
  int degree = 3;
  int samples = 20;
  unsigned long seed = 0;
  std::string output;

  // Applies one key = value assignment; throws ConfigError on unknown keys
  // or malformed values.
  void set(const std::string& key, const std::string& value);

  // Validates ranges and the metric (symmetric, invertible); throws
  // ConfigError. Returns the validated metric.
  Metric validated_metric() const;
  void validate() const;

  std::vector<std::pair<std::string, std::string>> echo() const;

  static const char* layer_name(Layer l);
};

// Parses the line-oriented "key = value" format. Syntax errors carry the
// line number. Comment lines start with '#'.
RunConfig parse_spec(const std::string& text);

// Matrix literal: nested bracket lists of integers or "p/q" fractions.
std::vector<std::vector<Rational>> parse_matrix(const std::string& text);

}  // namespace kappa
