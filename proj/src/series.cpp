#include "kappa/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace kappa {

Series Series::lambda_pow(int k, const Scalar& coeff, int order) {
  Series s(order);
  if (k <= order) s.c_[k] = coeff;
  return s;
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

int Series::low_degree() const {
  for (int k = 0; k <= order(); ++k)
    if (!c_[k].is_zero()) return k;
  return -1;
}

Series Series::truncated(int order) const {
  Series r(order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) r.c_[k] = c_[k];
  return r;
}

Series Series::conj() const {
  Series r(order());
  for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k].conj();
  return r;
}

Series Series::inverse() const {
  if (c_[0].is_zero())
    throw std::domain_error("series inverse: constant term is zero");
  const int n = order();
  Series r(n);
  Scalar inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Scalar acc;
    for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -(inv0 * acc);
  }
  return r;
}

Series Series::shift_down() const {
  if (!c_[0].is_zero())
    throw std::domain_error(
        "series lam-division: nonzero constant term (lam^-1 residue)");
  if (order() == 0) return Series(0);
  Series r(order() - 1);
  for (int k = 1; k <= order(); ++k) r.c_[k - 1] = c_[k];
  return r;
}

Series Series::operator-() const {
  Series r(order());
  for (int k = 0; k <= order(); ++k) r.c_[k] = -c_[k];
  return r;
}

Series& Series::operator+=(const Series& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

Series& Series::operator*=(const Series& o) {
  *this = *this * o;
  return *this;
}

Series& Series::operator*=(const Scalar& s) {
  for (auto& ck : c_) ck *= s;
  return *this;
}

bool operator==(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k)
    if (a.c_[k] != b.c_[k]) return false;
  // Differing orders compare equal only on the shared window; callers keep
  // uniform orders, longer tails must be zero to count as equal.
  for (int k = n + 1; k <= a.order(); ++k)
    if (!a.c_[k].is_zero()) return false;
  for (int k = n + 1; k <= b.order(); ++k)
    if (!b.c_[k].is_zero()) return false;
  return true;
}

std::string Series::str() const {
  std::string out;
  for (int k = 0; k <= order(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[k].str();
    if (k > 0) out += "*lam" + (k == 1 ? std::string() : "^" + std::to_string(k));
  }
  return out.empty() ? "0" : out;
}

}  // namespace kappa
