#pragma once

#include "kappa/hom.hpp"
#include "kappa/liealg.hpp"
#include "kappa/report.hpp"

namespace kappa {

enum class AlgebraKind { Poincare, Weyl };

// Deformed enveloping-algebra presentation over truncated lam-series:
// canonical generators M^{mu nu} (mu < nu, with M^{i0} = -M^{0i}), P_mu and
// optionally D; reordering relations with series tails; coproducts; counit
// zero on generators.
struct AlgebraPresentation {
  AlgebraKind kind;
  Metric g;
  int order;  // truncation order N
  std::vector<Gen> gens;
  RelationSet rels;
  std::map<Gen, Poly> coproduct;  // arity 2
  std::map<Gen, Scalar> counit;   // all zero

  GenMap coproduct_map() const;

  // M^{ab} for arbitrary index order as a signed canonical generator.
  Poly rotation_poly(int a, int b) const;
};

// Builders expand every e^{-P0/kappa} tail to the requested order and fail
// (ConfigError) if any kappa-prefactor leaves a lam^{-1} residue.
AlgebraPresentation build_kappa_poincare_algebra(const Metric& g, int order);
AlgebraPresentation build_kappa_weyl_algebra(const Metric& g, int order);

// Order-by-order checks: Jacobi on generator triples, Delta-homomorphism on
// generator pairs, coassociativity, counit axioms.
std::vector<CheckResult> algebra_axiom_suite(const AlgebraPresentation& A);

// Extracts the lam^0 structure constants and compares them against the
// classical algebra, raising indices with the metric. The deformed bracket
// convention places D first: [D, P_mu] at lam^0 equals +i P_mu, matching the
// classical [P_mu, D] = -i P_mu with arguments swapped.
bool classical_limit_matches(const AlgebraPresentation& A, std::string* detail);

struct AntipodeResult {
  std::map<Gen, Poly> antipode;
  bool ok = false;         // both antipode axioms hold mod lam^{N+1}
  bool antihom_ok = false; // S([x,y]) = [S(y),S(x)] on generator pairs
  std::string detail;
};

// Solves m(S (x) id) Delta = eta eps order by order from S = -id at lam^0,
// then verifies the right axiom and the anti-homomorphism property.
AntipodeResult derive_antipode(const AlgebraPresentation& A);

}  // namespace kappa
