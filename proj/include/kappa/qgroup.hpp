#pragma once

#include "kappa/poisson.hpp"
#include "kappa/report.hpp"

namespace kappa {

// Hopf presentation of a quantum function algebra: generators, reordering
// relations, and the structure maps on generators.
struct GroupPresentation {
  GroupKind kind;
  Metric g;
  int order;
  std::vector<Gen> gens;
  RelationSet rels;
  std::map<Gen, Poly> coproduct;  // arity 2
  std::map<Gen, Scalar> counit;
  std::map<Gen, Poly> antipode;   // arity 1
  OrthoReducer ortho;             // raw quadrics; axiom checks reduce with it

  GenMap coproduct_map() const;
  GenMap identity_map() const { return GenMap::identity(order); }
};

GroupPresentation build_kappa_poincare_group(const Metric& g, int order);
GroupPresentation build_kappa_weyl_group(const Metric& g, int order);

enum class HopfSuiteScope {
  AxiomsOnly,  // Delta-homomorphism, coassociativity, counit, antipode,
               // jacobi-consistency
  Full         // plus counit/antipode compatibility with every relation
};

// The exact axiom suite: Delta is an algebra map on every relation pair,
// coassociativity, counit and antipode axioms on generators, and (Full
// scope) counit/antipode compatibility with the relations. Residuals reduce
// by the orthogonality ideal, escalating from the raw quadrics to the
// completed basis only when needed.
std::vector<CheckResult> hopf_axiom_suite(
    const GroupPresentation& H, HopfSuiteScope scope = HopfSuiteScope::Full);

// [x,[y,z]] + [z,[x,y]] + [y,[z,x]] in normal form.
Poly jacobiator(const GroupPresentation& H, const Gen& x, const Gen& y,
                const Gen& z);

// Closed form of the Weyl jacobiator on (Lam^al_be, a^rho, a^sig):
//   (1/kappa^2) g00 (1 - e^{2b}) (g^{al sig} Lam^rho_be - g^{al rho} Lam^sig_be).
// The exponent sign follows the relations; see the jacobiator tests.
Poly weyl_jacobiator_closed_form(const GroupPresentation& H, int al, int be,
                                 int rho, int sig);

// Verifies every relation is stable under the formal *-involution fixing the
// generators and conjugating scalars, with product order reversal.
std::vector<CheckResult> star_reality_check(const GroupPresentation& H);

// Substitutes b -> 0, e^{+-b} -> 1.
Poly substitute_b_zero(const Poly& x);

// Relation-for-relation agreement of the Weyl presentation at b = 0 with the
// Poincare presentation (relations and all Hopf maps).
bool weyl_reduces_to_poincare_at_b0(const GroupPresentation& W,
                                    const GroupPresentation& P,
                                    std::string* detail);

}  // namespace kappa
