#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kappa/duality.hpp"

using namespace kappa;

namespace {
constexpr int D = 3;  // degree cap
constexpr int NO = 3; // order cap

struct Setup {
  GroupPresentation H;
  AlgebraPresentation A;
  Pairing P;
};

Setup make(GroupKind kind, const Metric& g) {
  Setup s{kind == GroupKind::Weyl ? build_kappa_weyl_group(g, NO)
                                  : build_kappa_poincare_group(g, NO),
          kind == GroupKind::Weyl ? build_kappa_weyl_algebra(g, NO)
                                  : build_kappa_poincare_algebra(g, NO),
          {}};
  s.P = build_pairing(s.H, s.A, D, NO);
  return s;
}

bool all_pass(const std::vector<CheckResult>& rs, std::string* why) {
  for (const auto& r : rs)
    if (r.status == CheckStatus::Fail) {
      *why = r.name + ": " + r.detail;
      return false;
    }
  return true;
}
}  // namespace

TEST_CASE("pair: generator table and counit base cases") {
  Setup s = make(GroupKind::Poincare, Metric::minkowski(2));
  PairEvaluator ev(s.H, s.A, s.P, SplitSide::AlgebraFirst);
  // <a^mu, P_nu> = i delta^mu_nu
  for (int mu = 0; mu < 2; ++mu)
    for (int nu = 0; nu < 2; ++nu) {
      Series v = ev.eval_words({Gen::coord(mu)}, {Gen::momentum(nu)});
      Series want = mu == nu ? Series(Scalar::i(), NO) : Series(NO);
      CHECK(v == want);
    }
  // <1, P_nu> = eps(P_nu) = 0
  CHECK(ev.eval_words({}, {Gen::momentum(0)}).is_zero());
  // <Lam^mu_nu, 1> = delta^mu_nu
  CHECK(ev.eval_words({Gen::lorentz(0, 0)}, {}) == Series::one(NO));
  CHECK(ev.eval_words({Gen::lorentz(0, 1)}, {}).is_zero());
}

TEST_CASE("pair: split-order agreement on a quadratic pair, value frozen") {
  Setup s = make(GroupKind::Poincare, Metric::minkowski(2));
  PairEvaluator left(s.H, s.A, s.P, SplitSide::GroupFirst);
  PairEvaluator right(s.H, s.A, s.P, SplitSide::AlgebraFirst);
  Word x = {Gen::coord(0), Gen::coord(1)};
  Word X = {Gen::momentum(1), Gen::momentum(0)};
  Series a = left.eval_words(x, X);
  Series b = right.eval_words(x, X);
  CHECK(a == b);
  // frozen from the double recursion: <a^0 a^1, P_1 P_0> = -1
  Series want(NO);
  want.set_coeff(0, Scalar(-1));
  CHECK(a == want);
}

TEST_CASE("pair: degree cap is enforced") {
  Setup s = make(GroupKind::Poincare, Metric::minkowski(2));
  PairEvaluator ev(s.H, s.A, s.P, SplitSide::AlgebraFirst);
  Poly big = Poly::word(Word(D + 1, Gen::coord(0)), NO);
  CHECK_THROWS_AS(ev.eval(big, Poly::gen(Gen::momentum(0), NO)), ConfigError);
}

TEST_CASE("pairing well-defined: kappa-Poincare n in {2,3}") {
  std::string why;
  for (int n : {2, 3}) {
    Setup s = make(GroupKind::Poincare, Metric::minkowski(n));
    CHECK_MESSAGE(all_pass(pairing_well_defined(s.H, s.A, s.P), &why), why);
  }
  // non-diagonal metric as well
  std::mt19937_64 rng(31);
  Setup s = make(GroupKind::Poincare, random_metric(2, rng, false));
  CHECK_MESSAGE(all_pass(pairing_well_defined(s.H, s.A, s.P), &why), why);
}

TEST_CASE("pairing well-defined: kappa-Weyl light-cone n=2") {
  std::string why;
  Setup s = make(GroupKind::Weyl, Metric::light_cone(2));
  CHECK_MESSAGE(all_pass(pairing_well_defined(s.H, s.A, s.P), &why), why);
}

TEST_CASE("fault injection: <a^mu, P_nu> = 2i delta is rejected") {
  Setup s = make(GroupKind::Poincare, Metric::minkowski(2));
  for (int mu = 0; mu < 2; ++mu)
    s.P.table[{Gen::coord(mu), Gen::momentum(mu)}] =
        Scalar::i_times(Rational(2));
  auto rs = pairing_well_defined(s.H, s.A, s.P);
  bool failed = false;
  for (const auto& r : rs)
    if (r.status == CheckStatus::Fail) failed = true;
  CHECK(failed);
}

TEST_CASE("structure maps") {
  std::string why;
  for (int n : {2, 3}) {
    Setup s = make(GroupKind::Poincare, Metric::minkowski(n));
    CHECK_MESSAGE(all_pass(verify_structure_maps(s.H, s.A, s.P), &why), why);
  }
  Setup s = make(GroupKind::Weyl, Metric::light_cone(2));
  CHECK_MESSAGE(all_pass(verify_structure_maps(s.H, s.A, s.P), &why), why);
}
