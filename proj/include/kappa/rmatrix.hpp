#pragma once

#include "kappa/liealg.hpp"

namespace kappa {

// Fully antisymmetric rank-2/3 tensor over a Lie algebra basis, stored on
// strictly increasing index tuples. Coefficients are lam-weighted exactly
// (the 1/kappa prefactors live at lam-degree 1 and 2).
struct Wedge {
  int rank = 2;
  std::map<std::vector<int>, Series> comps;

  bool is_zero() const;
  void add(std::vector<int> idx, const Series& c);  // signs resolved here
  // Full tensor embedding: sum over permutations with signs.
  Poly to_tensor(const LieAlgebra& L, int order) const;
  std::string str(const LieAlgebra& L) const;

  friend bool operator==(const Wedge& a, const Wedge& b);
};

// r = (i/kappa) M_{0 nu} ^ P^nu by direct index contraction.
Wedge build_r(const Metric& g, const LieAlgebra& L, int order);
// The same element assembled from its component display
// r^{mu nu, al} = (i/2kappa)(delta^mu_0 g^{nu al} - delta^nu_0 g^{mu al}).
Wedge build_r_from_components(const Metric& g, const LieAlgebra& L, int order);

// [r,r] = [r12,r13] + [r12,r23] + [r13,r23] computed in the enveloping
// algebra tensor cube, verified fully antisymmetric and projected to rank 3.
// Throws std::logic_error when the result fails antisymmetry.
Wedge schouten(const Wedge& r, const LieAlgebra& L,
               Strategy strategy = Strategy::Leftmost);

// Closed form of [r,r]: (i g00 / 2 kappa^2) sum_{al,be} M_{al be} ^ P^al ^ P^be
// with this metric's raised momenta. The overall 1/2 is the engine-determined
// normalization of the implicit triple-wedge sum.
Wedge schouten_closed_form(const Metric& g, const LieAlgebra& L, int order);

bool is_cybe(const Wedge& r, const LieAlgebra& L);

// True iff ad_X annihilates w (slot-wise action by structure constants).
bool ad_invariant(const Wedge& w, const LieAlgebra& L, const Gen& X);

}  // namespace kappa
