#pragma once

#include <optional>

#include "kappa/metric.hpp"

namespace kappa {

// Classical Poincare / Weyl Lie algebra over a metric: canonical basis
// {M_{mu nu} (mu<nu), P_mu, optionally D} with all-lower-index brackets and
// exact structure constants. Raised-index variants are derived on demand.
class LieAlgebra {
 public:
  LieAlgebra(Metric g, bool with_dilatation);

  const Metric& metric() const { return g_; }
  bool has_dilatation() const { return with_d_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Gen>& basis() const { return basis_; }
  int index_of(const Gen& g) const;  // -1 if absent

  // f_{ab}{}^c over basis positions.
  const Scalar& f(int a, int b, int c) const { return f_[a][b][c]; }
  Scalar& f_mut(int a, int b, int c) { return f_[a][b][c]; }

  // Bracket of basis elements as coefficient vector over the basis.
  std::vector<Scalar> bracket(int a, int b) const;

  // PBW reordering rules for the enveloping algebra tensor calculus.
  RelationSet relations(int series_order) const;

 private:
  friend LieAlgebra build_poincare(const Metric&);
  friend LieAlgebra build_weyl(const Metric&);
  void set_bracket(const Gen& x, const Gen& y,
                   const std::vector<std::pair<Scalar, Gen>>& value);

  Metric g_;
  bool with_d_;
  std::vector<Gen> basis_;
  std::vector<std::vector<std::vector<Scalar>>> f_;
};

LieAlgebra build_poincare(const Metric& g);
LieAlgebra build_weyl(const Metric& g);

struct TripleViolation {
  Gen x, y, z;
  std::string residual;
};

// Exact Jacobi evaluation over all basis triples; first violation if any.
std::optional<TripleViolation> jacobi_check(const LieAlgebra& L);

// Verifies antisymmetry of the bracket table.
bool antisymmetry_check(const LieAlgebra& L);

// Verifies the defining matrix realization of the rotation generators
// against the M-M structure constants, exactly.
bool matrix_rep_check(const Metric& g, std::string* detail = nullptr);

}  // namespace kappa
