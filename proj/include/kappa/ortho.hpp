#pragma once

#include "kappa/metric.hpp"

namespace kappa {

// Reduction modulo the Lorentz orthogonality ideal, generated by
//   Lam^ga_be g_{ga al} Lam^al_nu - g_{be nu}   and
//   Lam^mu_al g^{al be} Lam^nu_be - g^{mu nu}.
// The quadrics are completed to a Groebner basis once per metric (directed
// division by the raw quadrics alone is not confluent), then applied to the
// commutative Lam-block of each word. Axiom checks and classical/quantum
// comparisons reduce with these; the presentations themselves stay on the
// free ring.
enum class OrthoMode {
  Raw,      // the defining quadrics as directed rules (single-step residuals)
  Complete  // Groebner-completed basis (full ideal-membership decisions)
};

class OrthoReducer {
 public:
  OrthoReducer() = default;
  explicit OrthoReducer(const Metric& g, OrthoMode mode = OrthoMode::Raw);

  Poly reduce(const Poly& x, const RelationSet& ring) const;
  bool reduces_to_zero(const Poly& x, const RelationSet& ring) const;
  int rule_count() const { return static_cast<int>(rules_.size()); }

 private:
  struct Rule {
    Word lead;  // leading monomial (sorted Lam letters)
    Scalar lc;
    std::vector<std::pair<Word, Scalar>> tail;  // lc*lead + tail == 0
  };
  std::vector<Rule> rules_;
};

}  // namespace kappa
