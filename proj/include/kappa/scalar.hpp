#pragma once

#include <gmpxx.h>
#include <string>

namespace kappa {

using Rational = mpq_class;

// Parses "p/q" or an integer literal. Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

std::string rational_str(const Rational& r);

// Gaussian rational re + im*i. All arithmetic is exact.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(long v) : re(v), im(0) {}
  Scalar(Rational r) : re(std::move(r)), im(0) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar i_times(const Rational& r) { return Scalar(Rational(0), r); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar(re, -im); }
  Scalar inverse() const;  // throws std::domain_error on zero

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Canonical rendering, e.g. "1", "-2/3", "i", "(1/2-3i)".
  std::string str() const;
};

}  // namespace kappa
