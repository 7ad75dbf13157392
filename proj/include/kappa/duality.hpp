#pragma once

#include "kappa/qalg.hpp"
#include "kappa/qgroup.hpp"

namespace kappa {

// Generator-level duality table; absent entries pair to zero.
struct Pairing {
  std::map<std::pair<Gen, Gen>, Scalar> table;
  int degree_cap = 3;
  int order_cap = 3;
};

Pairing build_pairing(const GroupPresentation& H, const AlgebraPresentation& A,
                      int degree_cap, int order_cap);

enum class SplitSide { GroupFirst, AlgebraFirst };

// Recursive Hopf-pairing evaluation: <xy, X> = <x (x) y, Delta X> and
// <x, XY> = <Delta x, X (x) Y>, with the generator table at the base. The
// two split orders must agree; both are provided for the independence check.
// Values are exact modulo lam^{order_cap+1}. Throws ConfigError when the
// group degree cap is exceeded.
class PairEvaluator {
 public:
  PairEvaluator(const GroupPresentation& H, const AlgebraPresentation& A,
                const Pairing& P, SplitSide side);

  Series eval(const Poly& x, const Poly& X);
  Series eval_words(const Word& x, const Word& X);

 private:
  struct Key {
    Word x, X;
    int budget;
    auto operator<=>(const Key&) const = default;
  };
  Series eval_impl(const Word& x, const Word& X, int budget);
  const Poly& group_coproduct(const Word& w);
  const Poly& algebra_coproduct(const Word& w);
  // (id (x) <.,G>) Delta x — group side contracted against one algebra letter
  const Poly& skew(const Word& x, const Gen& G);
  // (<g,.> (x) id) Delta X — algebra side contracted against one group letter
  const Poly& coskew(const Word& X, const Gen& g);

  const GroupPresentation& H_;
  const AlgebraPresentation& A_;
  const Pairing& P_;
  SplitSide side_;
  std::map<Key, Series> memo_;
  std::map<Word, Poly> dgrp_, dalg_;
  std::map<std::pair<Word, Gen>, Poly> skew_, coskew_;
};

// For every relation of one side and every normal-form monomial of the other
// (degree <= cap): the relation pairs to zero. Includes the <b^n, D> rows
// and the split-order independence over the full monomial grid.
std::vector<CheckResult> pairing_well_defined(const GroupPresentation& H,
                                              const AlgebraPresentation& A,
                                              const Pairing& P);

// Bicrossproduct structure maps: the right action display against the
// commutator, the coaction's counitality, and the duality relations
// <t, X |> P_ga> = <beta(t), X (x) P_ga>, <Ga <| t, X> = <Ga (x) t, Delta X>.
std::vector<CheckResult> verify_structure_maps(const GroupPresentation& H,
                                               const AlgebraPresentation& A,
                                               const Pairing& P);

// Normal-form monomial basis words up to a degree cap.
std::vector<Word> monomial_basis(const std::vector<Gen>& gens,
                                 const RelationSet& rels, int max_degree);

}  // namespace kappa
