#include "kappa/runconfig.hpp"

#include <sstream>

namespace kappa {

namespace {

// hard resource limits; exceeding them is an explicit configuration error
constexpr int kMaxDim = 6;
constexpr int kMaxOrder = 12;
constexpr int kMaxDegree = 6;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    int r = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return r;
  } catch (...) {
    throw ConfigError("invalid integer for key '" + key + "': " + v);
  }
}

}  // namespace

std::vector<std::vector<Rational>> parse_matrix(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= t.size() || t[pos] != c)
      throw ConfigError("malformed matrix literal near position " +
                        std::to_string(pos) + " (expected '" +
                        std::string(1, c) + "')");
    ++pos;
  };
  std::vector<std::vector<Rational>> rows;
  expect('[');
  while (true) {
    expect('[');
    std::vector<Rational> row;
    while (true) {
      size_t start = pos;
      while (pos < t.size() && t[pos] != ',' && t[pos] != ']') ++pos;
      if (start == pos) throw ConfigError("empty matrix entry");
      row.push_back(parse_rational(t.substr(start, pos - start)));
      if (pos < t.size() && t[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect(']');
    rows.push_back(std::move(row));
    if (pos < t.size() && t[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  if (pos != t.size()) throw ConfigError("trailing characters after matrix");
  return rows;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "n") {
    n = parse_int(key, value);
  } else if (key == "metric") {
    metric_entries = parse_matrix(value);
  } else if (key == "deformation") {
    if (value == "poincare")
      deformation = GroupKind::Poincare;
    else if (value == "weyl")
      deformation = GroupKind::Weyl;
    else
      throw ConfigError("unknown deformation '" + value +
                        "' (expected poincare or weyl)");
  } else if (key == "layer") {
    if (value == "classical")
      layer = Layer::Classical;
    else if (value == "group")
      layer = Layer::Group;
    else if (value == "algebra")
      layer = Layer::Algebra;
    else if (value == "duality")
      layer = Layer::Duality;
    else if (value == "all")
      layer = Layer::All;
    else
      throw ConfigError("unknown layer '" + value + "'");
  } else if (key == "order") {
    order = parse_int(key, value);
  } else if (key == "degree") {
    degree = parse_int(key, value);
  } else if (key == "samples") {
    samples = parse_int(key, value);
  } else if (key == "seed") {
    seed = static_cast<unsigned long>(parse_int(key, value));
  } else if (key == "output") {
    output = value;
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

Metric RunConfig::validated_metric() const {
  if (metric_entries.empty()) throw ConfigError("metric is not set");
  int dim = n > 0 ? n : static_cast<int>(metric_entries.size());
  if (static_cast<int>(metric_entries.size()) != dim)
    throw ConfigError("metric size does not match n");
  return Metric(dim, metric_entries);
}

void RunConfig::validate() const {
  if (n < 2) throw ConfigError("n must be at least 2");
  if (n > kMaxDim)
    throw ConfigError("n exceeds the supported limit (" +
                      std::to_string(kMaxDim) + ")");
  if (order < 1) throw ConfigError("order must be at least 1");
  if (order > kMaxOrder)
    throw ConfigError("order exceeds the supported limit (" +
                      std::to_string(kMaxOrder) + ")");
  if (degree < 2) throw ConfigError("degree must be at least 2");
  if (degree > kMaxDegree)
    throw ConfigError("degree exceeds the supported limit (" +
                      std::to_string(kMaxDegree) + ")");
  if (samples < 0) throw ConfigError("samples must be nonnegative");
  validated_metric();
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.push_back({"n", std::to_string(n)});
  {
    std::string m = "[";
    for (size_t i = 0; i < metric_entries.size(); ++i) {
      m += i ? ",[" : "[";
      for (size_t j = 0; j < metric_entries[i].size(); ++j) {
        if (j) m += ",";
        m += rational_str(metric_entries[i][j]);
      }
      m += "]";
    }
    out.push_back({"metric", m + "]"});
  }
  out.push_back({"deformation",
                 deformation == GroupKind::Weyl ? "weyl" : "poincare"});
  out.push_back({"layer", layer_name(layer)});
  out.push_back({"order", std::to_string(order)});
  out.push_back({"degree", std::to_string(degree)});
  out.push_back({"samples", std::to_string(samples)});
  out.push_back({"seed", std::to_string(seed)});
  return out;
}

const char* RunConfig::layer_name(Layer l) {
  switch (l) {
    case Layer::Classical:
      return "classical";
    case Layer::Group:
      return "group";
    case Layer::Algebra:
      return "algebra";
    case Layer::Duality:
      return "duality";
    case Layer::All:
      return "all";
  }
  return "?";
}

RunConfig parse_spec(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    try {
      cfg.set(key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (cfg.n == 0 && !cfg.metric_entries.empty())
    cfg.n = static_cast<int>(cfg.metric_entries.size());
  return cfg;
}

}  // namespace kappa
