#pragma once

#include <map>
#include <string>
#include <vector>

#include "kappa/gen.hpp"
#include "kappa/series.hpp"

namespace kappa {

using Word = std::vector<Gen>;

// A monomial of a tensor power: one word per tensor slot. Plain algebra
// elements have a single slot; tensor squares/cubes have two/three. Slots
// multiply componentwise (all objects here are bosonic, no signs).
struct TWord {
  std::vector<Word> slots;

  int arity() const { return static_cast<int>(slots.size()); }
  int degree() const;
  bool is_unit() const;

  friend bool operator==(const TWord& x, const TWord& y) {
    return x.slots == y.slots;
  }
  friend auto operator<=>(const TWord& x, const TWord& y) {
    return x.slots <=> y.slots;
  }

  std::string str() const;
};

TWord unit_word(int arity);
TWord single_word(const Word& w);       // arity 1
TWord concat(const TWord&, const TWord&);

// Noncommutative polynomial: finite Series-weighted sum of tensor words.
// Zero coefficients are never stored.
class Poly {
 public:
  explicit Poly(int arity = 1) : arity_(arity) {}

  static Poly zero(int arity, int order);
  static Poly unit(int order, int arity = 1);           // 1
  static Poly gen(const Gen& g, int order);             // single generator
  static Poly word(const Word& w, int order);           // arity 1 word
  static Poly term(const TWord& w, const Series& c);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<TWord, Series>& terms() const { return terms_; }
  int max_degree() const;

  void add_term(const TWord& w, const Series& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);  // raw concat product
  Poly& operator*=(const Poly& o);

  Poly scaled(const Scalar& s) const;
  Poly scaled(const Series& s) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly truncated(int order) const;
  // Divide every coefficient by lam; throws if any constant term survives.
  Poly shifted_down() const;
  // Coefficient of lam^k as a lam-free polynomial (coefficients of order 0).
  Poly lambda_part(int k) const;
  int first_nonzero_lambda_order() const;  // -1 when zero

  // Embed into a larger tensor power: slot j goes to slot j + offset.
  Poly embedded(int offset, int total_arity) const;
  // Concatenate two adjacent slots (slot, slot+1) into one.
  Poly merged_slots(int slot) const;

  // Canonical text form: terms sorted by word, explicit lam powers.
  std::string str() const;

 private:
  int arity_;
  std::map<TWord, Series> terms_;
};

}  // namespace kappa
