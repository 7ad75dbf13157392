#pragma once

#include <vector>

#include "kappa/scalar.hpp"

namespace kappa {

// Truncated formal power series in lam (the inverse deformation parameter),
// exact Gaussian-rational coefficients. A Series of order N represents an
// element modulo lam^{N+1}; binary operations truncate to the smaller order.
class Series {
 public:
  Series() : c_(1) {}  // zero of order 0
  explicit Series(int order) : c_(order + 1) {}
  Series(const Scalar& s, int order) : c_(order + 1) { c_[0] = s; }

  static Series zero(int order) { return Series(order); }
  static Series one(int order) { return Series(Scalar(1), order); }
  // coeff * lam^k
  static Series lambda_pow(int k, const Scalar& coeff, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& coeff(int k) const { return c_[k]; }
  void set_coeff(int k, const Scalar& s) { c_[k] = s; }

  bool is_zero() const;
  // Smallest k with nonzero coefficient, or -1 when zero.
  int low_degree() const;

  Series truncated(int order) const;
  Series conj() const;  // coefficient-wise complex conjugation

  // Multiplicative inverse modulo lam^{order+1}; requires invertible
  // constant term (throws std::domain_error otherwise).
  Series inverse() const;

  // Divides by lam; requires zero constant term (throws std::domain_error).
  // The result is known one order less deep.
  Series shift_down() const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series& operator*=(const Scalar& s);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Scalar& s) { return a *= s; }
  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  // Canonical form: ascending lam powers, zero terms dropped ("0" if zero).
  std::string str() const;

 private:
  std::vector<Scalar> c_;
};

}  // namespace kappa
