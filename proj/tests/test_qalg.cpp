#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kappa/qalg.hpp"

using namespace kappa;

namespace {
constexpr int N = 4;

bool all_pass(const std::vector<CheckResult>& rs, std::string* why) {
  for (const auto& r : rs)
    if (r.status == CheckStatus::Fail) {
      *why = r.name + ": " + r.detail;
      return false;
    }
  return true;
}

Series lam_series(int k, Scalar c, int order) {
  return Series::lambda_pow(k, c, order);
}
}  // namespace

TEST_CASE("builder: relation examples") {
  Metric g = Metric::minkowski(4);
  AlgebraPresentation A = build_kappa_poincare_algebra(g, N);

  // [M^{ij}, P_0] = 0
  CHECK(commutator(A.rotation_poly(1, 2), Poly::gen(Gen::momentum(0), N),
                   A.rels)
            .is_zero());

  // [M^{i0}, P_0] = i kappa g^{i0}(1 - E) + i g^{ik} P_k; for Minkowski
  // g^{i0} = 0, so [M^{10}, P_0] = i g^{11} P_1 = -i P_1.
  Poly got = commutator(-A.rotation_poly(0, 1), Poly::gen(Gen::momentum(0), N),
                        A.rels);
  Poly want = Poly::term(single_word({Gen::momentum(1)}),
                         Series(-Scalar::i(), N));
  CHECK(got == want);

  // [P_mu, P_nu] = 0 at all orders
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      CHECK(commutator(Poly::gen(Gen::momentum(mu), N),
                       Poly::gen(Gen::momentum(nu), N), A.rels)
                .is_zero());

  // Delta P_0 primitive
  Poly d = A.coproduct.at(Gen::momentum(0));
  Poly dexp(2);
  dexp += Poly::gen(Gen::momentum(0), N).embedded(0, 2);
  dexp += Poly::gen(Gen::momentum(0), N).embedded(1, 2);
  CHECK(d == dexp);

  // Delta P_k = P_k (x) E + 1 (x) P_k carries the series tail
  Poly dk = A.coproduct.at(Gen::momentum(1));
  CHECK(dk.term_count() > 2);
}

TEST_CASE("builder: weyl dilatation sector") {
  Metric g = Metric::light_cone(4);
  AlgebraPresentation A = build_kappa_weyl_algebra(g, N);

  // [D, P_0] = i kappa (1 - e^{-P_0/kappa}) = i P_0 - (i/2) lam P_0^2 + ...
  Poly got = commutator(Poly::gen(Gen::dilatation(), N),
                        Poly::gen(Gen::momentum(0), N), A.rels);
  Poly want(1);
  want.add_term(single_word({Gen::momentum(0)}), Series(Scalar::i(), N));
  want.add_term(single_word({Gen::momentum(0), Gen::momentum(0)}),
                lam_series(1, Scalar::i_times(Rational(-1, 2)), N));
  want.add_term(
      single_word({Gen::momentum(0), Gen::momentum(0), Gen::momentum(0)}),
      lam_series(2, Scalar::i_times(Rational(1, 6)), N));
  want.add_term(single_word({Gen::momentum(0), Gen::momentum(0),
                             Gen::momentum(0), Gen::momentum(0)}),
                lam_series(3, Scalar::i_times(Rational(-1, 24)), N));
  want.add_term(
      single_word({Gen::momentum(0), Gen::momentum(0), Gen::momentum(0),
                   Gen::momentum(0), Gen::momentum(0)}),
      lam_series(4, Scalar::i_times(Rational(1, 120)), N));
  CHECK(got == want);

  // light-cone with g_{0i} = 0 for i in {2,3}: [D, P_i] = i P_i E only
  for (int i : {2, 3}) {
    Poly gotd = commutator(Poly::gen(Gen::dilatation(), N),
                           Poly::gen(Gen::momentum(i), N), A.rels);
    Poly x(1);
    x.add_term(single_word({Gen::momentum(0)}), lam_series(1, Scalar(-1), N));
    Poly E = exp_series(x, A.rels, N);
    Poly wantd = normal_form(Poly::gen(Gen::momentum(i), N) * E, A.rels)
                     .scaled(Scalar::i());
    CHECK(gotd == wantd);
  }

  // Delta D at lam^0 is primitive
  Poly d0 = A.coproduct.at(Gen::dilatation()).lambda_part(0);
  Poly dexp(2);
  dexp += Poly::gen(Gen::dilatation(), 0).embedded(0, 2);
  dexp += Poly::gen(Gen::dilatation(), 0).embedded(1, 2);
  CHECK(d0 == dexp);
}

TEST_CASE("lam^-1 cancellation is verified, not assumed") {
  // Every kappa-prefactor must cancel; the builders would throw otherwise.
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 6; ++trial) {
    Metric g = random_metric(2 + trial % 3, rng, trial % 2 == 0);
    CHECK_NOTHROW(build_kappa_poincare_algebra(g, N));
    CHECK_NOTHROW(build_kappa_weyl_algebra(g, N));
  }
}

TEST_CASE("axiom suite passes: poincare minkowski, weyl light-cone") {
  std::string why;
  CHECK_MESSAGE(
      all_pass(algebra_axiom_suite(
                   build_kappa_poincare_algebra(Metric::minkowski(4), N)),
               &why),
      why);
  CHECK_MESSAGE(
      all_pass(algebra_axiom_suite(
                   build_kappa_weyl_algebra(Metric::light_cone(4), N)),
               &why),
      why);
  // arbitrary-metric kappa-Poincare algebra: the paper's construction is
  // basis-generic, so random metrics must pass as well
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 4; ++trial) {
    Metric g = random_metric(2 + trial % 2, rng, trial % 2 == 0);
    CHECK_MESSAGE(all_pass(algebra_axiom_suite(build_kappa_poincare_algebra(g, N)),
                           &why),
                  why);
  }
}

TEST_CASE("fault injection: dropping the Delta M^{i0} tail is caught at lam^1") {
  Metric g = Metric::minkowski(3);
  AlgebraPresentation A = build_kappa_poincare_algebra(g, N);
  // drop the (1/kappa) M^{ij} (x) P_j tail of Delta M^{01}
  Poly& d = A.coproduct.at(Gen::rotation(0, 1));
  Poly cleaned(2);
  for (const auto& [w, c] : d.terms()) {
    bool tail = !w.slots[0].empty() && w.slots[0][0].sort == Sort::Rotation &&
                !w.slots[1].empty() && w.slots[1][0].sort == Sort::Momentum;
    if (!tail) cleaned.add_term(w, c);
  }
  d = cleaned;
  auto rs = algebra_axiom_suite(A);
  bool delta_failed = false;
  for (const auto& r : rs)
    if (r.name == "qalg/delta-homomorphism" && r.status == CheckStatus::Fail) {
      delta_failed = true;
      CHECK(r.first_bad_lambda_order == 1);
    }
  CHECK(delta_failed);
}

TEST_CASE("classical limit equals the lie algebras") {
  std::string why;
  CHECK_MESSAGE(classical_limit_matches(
                    build_kappa_poincare_algebra(Metric::minkowski(4), N), &why),
                why);
  CHECK_MESSAGE(classical_limit_matches(
                    build_kappa_weyl_algebra(Metric::light_cone(4), N), &why),
                why);
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 6; ++trial) {
    Metric g = random_metric(2 + trial % 3, rng, trial % 2 == 0);
    CHECK_MESSAGE(
        classical_limit_matches(build_kappa_poincare_algebra(g, N), &why), why);
    CHECK_MESSAGE(
        classical_limit_matches(build_kappa_weyl_algebra(g, N), &why), why);
  }
}

TEST_CASE("rotation sector is undeformed") {
  Metric g = Metric::minkowski(4);
  AlgebraPresentation A = build_kappa_poincare_algebra(g, N);
  // no lam corrections in the M-M relations
  for (const auto& x : A.gens)
    for (const auto& y : A.gens) {
      if (x.sort != Sort::Rotation || y.sort != Sort::Rotation) continue;
      Poly c = commutator(Poly::gen(x, N), Poly::gen(y, N), A.rels);
      for (const auto& [w, cf] : c.terms())
        for (int k = 1; k <= N; ++k) CHECK(cf.coeff(k).is_zero());
    }
  // Delta M^{ij} and Delta P_0 primitive: the classical subalgebra
  for (const auto& x : A.gens) {
    bool classical = (x.sort == Sort::Rotation && x.a > 0) ||
                     (x.sort == Sort::Momentum && x.a == 0);
    if (!classical) continue;
    Poly d = A.coproduct.at(x);
    Poly dexp(2);
    dexp += Poly::gen(x, N).embedded(0, 2);
    dexp += Poly::gen(x, N).embedded(1, 2);
    CHECK(d == dexp);
  }
}

TEST_CASE("derive_antipode") {
  for (const bool weyl : {false, true}) {
    Metric g = weyl ? Metric::light_cone(4) : Metric::minkowski(4);
    AlgebraPresentation A = weyl ? build_kappa_weyl_algebra(g, N)
                                 : build_kappa_poincare_algebra(g, N);
    AntipodeResult R = derive_antipode(A);
    CHECK_MESSAGE(R.ok, R.detail);
    CHECK_MESSAGE(R.antihom_ok, R.detail);
    // S(P_0) = -P_0 exactly
    CHECK(R.antipode.at(Gen::momentum(0)) == -Poly::gen(Gen::momentum(0), N));
    // S(M^{ij}) = -M^{ij}
    CHECK(R.antipode.at(Gen::rotation(1, 2)) ==
          -Poly::gen(Gen::rotation(1, 2), N));
    // S(P_k) = -P_k e^{+P_0/kappa}: order-lam^1 coefficient of P_k P_0 is -1
    const Poly& sp = R.antipode.at(Gen::momentum(1));
    Poly sp1 = sp.lambda_part(1);
    Poly want1 = Poly::term(single_word({Gen::momentum(1), Gen::momentum(0)}),
                            Series(Scalar(-1), 0));
    CHECK(sp1 == want1);
  }
}

TEST_CASE("stability: order 6 reproduces all order-4 passes") {
  std::string why;
  CHECK_MESSAGE(
      all_pass(algebra_axiom_suite(
                   build_kappa_poincare_algebra(Metric::minkowski(3), 6)),
               &why),
      why);
  CHECK_MESSAGE(
      all_pass(algebra_axiom_suite(
                   build_kappa_weyl_algebra(Metric::light_cone(3), 6)),
               &why),
      why);
}
