#include "kappa/poly.hpp"

#include <stdexcept>

namespace kappa {

int TWord::degree() const {
  int d = 0;
  for (const auto& s : slots) d += static_cast<int>(s.size());
  return d;
}

bool TWord::is_unit() const {
  for (const auto& s : slots)
    if (!s.empty()) return false;
  return true;
}

std::string TWord::str() const {
  std::string out;
  bool first_slot = true;
  for (const auto& s : slots) {
    if (!first_slot) out += " (x) ";
    first_slot = false;
    if (s.empty()) {
      out += "1";
      continue;
    }
    bool first = true;
    for (const auto& g : s) {
      if (!first) out += "*";
      first = false;
      out += g.str();
    }
  }
  return out;
}

TWord unit_word(int arity) {
  TWord w;
  w.slots.resize(arity);
  return w;
}

TWord single_word(const Word& w) {
  TWord t;
  t.slots.push_back(w);
  return t;
}

TWord concat(const TWord& x, const TWord& y) {
  TWord r = x;
  for (int s = 0; s < x.arity(); ++s)
    r.slots[s].insert(r.slots[s].end(), y.slots[s].begin(), y.slots[s].end());
  return r;
}

Poly Poly::zero(int arity, int) { return Poly(arity); }

Poly Poly::unit(int order, int arity) {
  Poly p(arity);
  p.add_term(unit_word(arity), Series::one(order));
  return p;
}

Poly Poly::gen(const Gen& g, int order) { return word({g}, order); }

Poly Poly::word(const Word& w, int order) {
  Poly p(1);
  p.add_term(single_word(w), Series::one(order));
  return p;
}

Poly Poly::term(const TWord& w, const Series& c) {
  Poly p(w.arity());
  p.add_term(w, c);
  return p;
}

int Poly::max_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

void Poly::add_term(const TWord& w, const Series& c) {
  if (w.arity() != arity_) throw std::logic_error("tensor arity mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(arity_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.arity_ != arity_) throw std::logic_error("tensor arity mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.arity_ != arity_) throw std::logic_error("tensor arity mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.arity_ != b.arity_) throw std::logic_error("tensor arity mismatch");
  Poly r(a.arity_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::scaled(const Scalar& s) const {
  Poly r(arity_);
  if (s.is_zero()) return r;
  for (const auto& [w, c] : terms_) r.add_term(w, c * s);
  return r;
}

Poly Poly::scaled(const Series& s) const {
  Poly r(arity_);
  for (const auto& [w, c] : terms_) r.add_term(w, c * s);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.arity_ != b.arity_) return false;
  Poly d = a;
  d -= b;
  return d.is_zero();
}

Poly Poly::truncated(int order) const {
  Poly r(arity_);
  for (const auto& [w, c] : terms_) r.add_term(w, c.truncated(order));
  return r;
}

Poly Poly::shifted_down() const {
  Poly r(arity_);
  for (const auto& [w, c] : terms_) r.add_term(w, c.shift_down());
  return r;
}

Poly Poly::lambda_part(int k) const {
  Poly r(arity_);
  for (const auto& [w, c] : terms_) {
    if (k > c.order()) continue;
    const Scalar& s = c.coeff(k);
    if (!s.is_zero()) r.add_term(w, Series(s, 0));
  }
  return r;
}

int Poly::first_nonzero_lambda_order() const {
  int best = -1;
  for (const auto& [w, c] : terms_) {
    int lo = c.low_degree();
    if (lo >= 0 && (best < 0 || lo < best)) best = lo;
  }
  return best;
}

Poly Poly::embedded(int offset, int total_arity) const {
  Poly r(total_arity);
  for (const auto& [w, c] : terms_) {
    TWord t = unit_word(total_arity);
    for (int s = 0; s < arity_; ++s) t.slots[offset + s] = w.slots[s];
    r.add_term(t, c);
  }
  return r;
}

Poly Poly::merged_slots(int slot) const {
  Poly r(arity_ - 1);
  for (const auto& [w, c] : terms_) {
    TWord t;
    t.slots.reserve(arity_ - 1);
    for (int s = 0; s < arity_; ++s) {
      if (s == slot + 1) {
        t.slots.back().insert(t.slots.back().end(), w.slots[s].begin(),
                              w.slots[s].end());
      } else {
        t.slots.push_back(w.slots[s]);
      }
    }
    r.add_term(t, c);
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += "  +  ";
    out += "[" + c.str() + "]";
    if (!w.is_unit()) out += " " + w.str();
  }
  return out;
}

}  // namespace kappa
