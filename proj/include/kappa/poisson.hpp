#pragma once

#include "kappa/hom.hpp"
#include "kappa/liealg.hpp"
#include "kappa/ortho.hpp"

namespace kappa {

enum class GroupKind { Poincare, Weyl };

// A derivation of the coordinate ring, given by its images on the primary
// coordinates (Lam^mu_nu, a^mu, e^b) together with the induced images on b
// and e^-b.
struct Derivation {
  std::map<Gen, Poly> img;
  Poly apply(const Poly& f, const RelationSet& ring) const;
};

struct FieldLabel {
  enum class Kind { Rotation, Translation, Dilatation } kind;
  int a = 0, b = 0;
  std::string str() const;
};

// Sklyanin data: left/right invariant vector fields indexed by the wedge
// basis {X^{al be}: al<be} u {X^al} (u {X_dil} for Weyl) and the real
// r-matrix coefficients in that basis.
struct PoissonStructure {
  GroupKind kind;
  Metric g;
  int order;
  RelationSet ring;  // free commutative coordinate ring (+ e^b contraction)
  std::vector<Gen> coordinates;
  std::vector<FieldLabel> labels;
  std::vector<Derivation> XL, XR;
  // entries on (rotation-label, translation-label) pairs; antisymmetric
  std::map<std::pair<int, int>, Rational> rtilde;
  // Brackets live on the free commutative ring; comparisons against the
  // closed group-manifold forms reduce by the orthogonality ideal.
  OrthoReducer ortho;
};

// Overall normalization relating the field-basis double sum to the
// coordinate brackets; its value is pinned by a dedicated test against the
// closed-form brackets rather than trusted.
inline constexpr int kSklyaninNormalization = -1;

PoissonStructure build_poisson(GroupKind kind, const Metric& g, int order);

// The invariant fields alone (shared with closure checks and tests).
void invariant_fields(GroupKind kind, const Metric& g, int order,
                      std::vector<FieldLabel>* labels,
                      std::vector<Derivation>* XL, std::vector<Derivation>* XR);

// {f, h} — bilinear, antisymmetric, Leibniz; carries one overall lam factor.
Poly sklyanin_bracket(const PoissonStructure& P, const Poly& f, const Poly& h);

// Precomputes the field applications on all coordinates once; coordinate
// brackets then cost only the r-matrix double sum.
class CoordinateBracketTable {
 public:
  explicit CoordinateBracketTable(const PoissonStructure& P);
  // {coordinates[i], coordinates[j]}
  Poly bracket(int i, int j) const;
  const PoissonStructure& structure() const { return P_; }

 private:
  const PoissonStructure& P_;
  std::vector<std::vector<Poly>> xl_, xr_;  // [label][coordinate]
};

// Closed-form coordinate bracket for a pair of coordinates.
Poly expected_coordinate_bracket(const PoissonStructure& P, const Gen& x,
                                 const Gen& y);

struct BracketMismatch {
  Gen x, y;
  std::string got, want;
};

// Compares sklyanin_bracket against the closed forms on every coordinate
// pair (including the b-sector for Weyl), modulo the orthogonality ideal.
// Empty result means full agreement.
std::vector<BracketMismatch> verify_coordinate_brackets(
    const PoissonStructure& P);

// {f,{h,k}} + {h,{k,f}} + {k,{f,h}}
Poly poisson_jacobi(const PoissonStructure& P, const Poly& f, const Poly& h,
                    const Poly& k);

// Closed form of the Weyl jacobiator on (Lam^al_be, a^rho, a^sig):
// lam^2 g00 (e^{2b} - 1)(g^{al sig} Lam^rho_be - g^{al rho} Lam^sig_be).
Poly weyl_jacobi_closed_form(const PoissonStructure& P, int al, int be,
                             int rho, int sig);

// [X_L, X_L] = +f and [X_R, X_R] = -f in the field basis, with the basis
// change M = iX, P = X, D = iX against the classical algebra; and every X_L
// commutes with every X_R.
bool field_closure_check(const PoissonStructure& P, std::string* detail);
bool lr_commute_check(const PoissonStructure& P, std::string* detail);

}  // namespace kappa
