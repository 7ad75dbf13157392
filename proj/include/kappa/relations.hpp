#pragma once

#include <set>
#include <stdexcept>

#include "kappa/poly.hpp"

namespace kappa {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Strategy { Leftmost, Rightmost };

// Reordering rules g_hi * g_lo = g_lo * g_hi + rhs for g_hi > g_lo in the
// generator order, plus contraction pairs (e.g. e^b * e^-b -> 1). Pairs
// without an entry commute. Every rhs is stored in normal form. Rule
// application terminates: each rewrite strictly decreases the word measure
// (count of non-absorbing letters, length, lex), well-founded because every
// rhs is shorter, lex-smaller, or lands in the commutative absorbing sort.
class RelationSet {
 public:
  void admit(const Gen& g) { admitted_.insert(g); }
  bool is_admitted(const Gen& g) const { return admitted_.count(g) > 0; }
  const std::set<Gen>& admitted() const { return admitted_; }

  // Register [hi, lo] = bracket_rhs, i.e. hi*lo -> lo*hi + bracket_rhs.
  void add_rule(const Gen& hi, const Gen& lo, const Poly& bracket_rhs);
  // Overwrites an existing rule (fault-injection hook for mutation tests).
  void replace_rule(const Gen& hi, const Gen& lo, const Poly& bracket_rhs);
  // Both adjacency orders of (x, y) contract to 1.
  void add_contraction(const Gen& x, const Gen& y);

  const Poly* rule(const Gen& hi, const Gen& lo) const;
  bool is_contraction(const Gen& x, const Gen& y) const;
  const std::map<std::pair<Gen, Gen>, Poly>& rules() const { return rules_; }

  // True when x and y commute and do not contract.
  bool commute_freely(const Gen& x, const Gen& y) const;

 private:
  std::set<Gen> admitted_;
  std::map<std::pair<Gen, Gen>, Poly> rules_;
  std::set<std::pair<Gen, Gen>> contractions_;
};

// Rewrites every slot of every word to sorted normal form with contractions
// exhausted. Idempotent. Throws ConfigError on generators outside R.
Poly normal_form(const Poly& x, const RelationSet& R,
                 Strategy strategy = Strategy::Leftmost);

// normal_form(x*y - y*x)
Poly commutator(const Poly& x, const Poly& y, const RelationSet& R);

// Truncated exponential sum_{m<=order} x^m / m! (any tensor arity). Requires
// every coefficient of x to carry lam-degree >= 1 and all generators in x to
// commute mutually.
Poly exp_series(const Poly& x, const RelationSet& R, int order);

// Formal *-involution: reverses words, conjugates coefficients (i -> -i).
Poly star(const Poly& x);

}  // namespace kappa
