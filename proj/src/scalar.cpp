#include "kappa/scalar.hpp"

#include <stdexcept>

namespace kappa {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  mpq_t q;
  mpq_init(q);
  if (mpq_set_str(q, t.c_str(), 10) != 0) {
    mpq_clear(q);
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  if (mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  }
  mpq_canonicalize(q);
  Rational r(q);
  mpq_clear(q);
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  Rational norm = re * re + im * im;
  return Scalar(re / norm, -im / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational nre = re * o.re - im * o.im;
  Rational nim = re * o.im + im * o.re;
  re = std::move(nre);
  im = std::move(nim);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::str() const {
  if (im == 0) return rational_str(re);
  std::string imag;
  if (im == 1)
    imag = "i";
  else if (im == -1)
    imag = "-i";
  else
    imag = rational_str(im) + "i";
  if (re == 0) return imag;
  std::string s = "(" + rational_str(re);
  if (imag[0] != '-') s += "+";
  return s + imag + ")";
}

}  // namespace kappa
