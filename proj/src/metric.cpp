#include "kappa/metric.hpp"

namespace kappa {

Rational rational_det(const std::vector<std::vector<Rational>>& m) {
  auto a = m;
  const int n = static_cast<int>(a.size());
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (int k = col; k < n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> rational_inverse(
    const std::vector<std::vector<Rational>>& m) {
  const int n = static_cast<int>(m.size());
  auto a = m;
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw ConfigError("matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (int k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (int k = 0; k < n; ++k) {
        a[row][k] -= f * a[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

Metric::Metric(int n, std::vector<std::vector<Rational>> entries)
    : n_(n), g_(std::move(entries)) {
  if (n < 2) throw ConfigError("metric dimension must be at least 2");
  if (static_cast<int>(g_.size()) != n)
    throw ConfigError("metric row count does not match dimension");
  for (const auto& row : g_)
    if (static_cast<int>(row.size()) != n)
      throw ConfigError("metric column count does not match dimension");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g_[i][j] != g_[j][i]) throw ConfigError("metric is not symmetric");
  det_ = rational_det(g_);
  if (det_ == 0) throw ConfigError("metric is singular");
  ginv_ = rational_inverse(g_);
}

Metric Metric::minkowski(int n) {
  std::vector<Rational> d(n, Rational(-1));
  d[0] = 1;
  return diagonal(d);
}

Metric Metric::light_cone(int n) {
  std::vector<std::vector<Rational>> e(n, std::vector<Rational>(n, 0));
  e[0][1] = e[1][0] = 1;
  for (int i = 2; i < n; ++i) e[i][i] = -1;
  return Metric(n, std::move(e));
}

Metric Metric::diagonal(const std::vector<Rational>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<std::vector<Rational>> e(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) e[i][i] = d[i];
  return Metric(n, std::move(e));
}

std::string Metric::str() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < n_; ++j) {
      if (j) s += ",";
      s += rational_str(g_[i][j]);
    }
    s += "]";
  }
  return s + "]";
}

Metric random_metric(int n, std::mt19937_64& rng, bool force_g00_zero) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (;;) {
    std::vector<std::vector<Rational>> e(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        e[i][j] = e[j][i] = v;
      }
    if (force_g00_zero) e[0][0] = 0;
    if (rational_det(e) == 0) continue;
    if (!force_g00_zero && e[0][0] == 0) continue;
    return Metric(n, std::move(e));
  }
}

}  // namespace kappa
