#pragma once

#include <random>
#include <vector>

#include "kappa/relations.hpp"
#include "kappa/scalar.hpp"

namespace kappa {

// Symmetric nondegenerate rational metric with cached exact inverse.
class Metric {
 public:
  // Validates symmetry and invertibility; throws ConfigError otherwise.
  Metric(int n, std::vector<std::vector<Rational>> entries);

  static Metric minkowski(int n);   // diag(1, -1, ..., -1)
  static Metric light_cone(int n);  // g00 = 0, g01 = g10 = 1, rest diag(-1)
  static Metric diagonal(const std::vector<Rational>& d);

  int dim() const { return n_; }
  const Rational& g(int mu, int nu) const { return g_[mu][nu]; }
  const Rational& ginv(int mu, int nu) const { return ginv_[mu][nu]; }
  const Rational& det() const { return det_; }

  bool g00_zero() const { return g_[0][0] == 0; }

  friend bool operator==(const Metric& a, const Metric& b) {
    return a.g_ == b.g_;
  }

  std::string str() const;

 private:
  int n_;
  std::vector<std::vector<Rational>> g_, ginv_;
  Rational det_;
};

// Exact determinant/inverse of a rational matrix (Gaussian elimination).
Rational rational_det(const std::vector<std::vector<Rational>>& m);
std::vector<std::vector<Rational>> rational_inverse(
    const std::vector<std::vector<Rational>>& m);

// Random symmetric invertible metric with small rational entries. When
// force_g00_zero is set the (0,0) entry is zero.
Metric random_metric(int n, std::mt19937_64& rng, bool force_g00_zero);

}  // namespace kappa
