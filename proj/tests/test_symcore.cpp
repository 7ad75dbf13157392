#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kappa/hom.hpp"
#include "kappa/metric.hpp"
#include "kappa/relations.hpp"

using namespace kappa;

namespace {

constexpr int N = 4;

Series lam(int k, Scalar c = Scalar(1)) { return Series::lambda_pow(k, c, N); }

// kappa-Poincare coordinate relations for n = 2, built by hand so this suite
// stays independent of the group-builder module it later cross-checks.
RelationSet poincare_group_rels_n2(const Metric& g) {
  RelationSet R;
  const int n = 2;
  std::vector<Gen> lorentz;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) R.admit(Gen::lorentz(mu, nu));
  for (int mu = 0; mu < n; ++mu) R.admit(Gen::coord(mu));

  // [a^rho, a^sig] = (i/kappa)(d^rho_0 a^sig - d^sig_0 a^rho);
  // rules keyed on (hi, lo) = (a^rho, a^sig) with rho > sig.
  for (int rho = 0; rho < n; ++rho)
    for (int sig = 0; sig < rho; ++sig) {
      Poly rhs(1);
      if (rho == 0) rhs.add_term(single_word({Gen::coord(sig)}), lam(1, Scalar::i()));
      if (sig == 0) rhs.add_term(single_word({Gen::coord(rho)}), lam(1, -Scalar::i()));
      if (!rhs.is_zero()) R.add_rule(Gen::coord(rho), Gen::coord(sig), rhs);
    }

  // [a^rho, L^al_be] = (i/kappa)((L^al_0 - d^al_0)L^rho_be + (L_{0be} - g_{0be})g^{al rho})
  for (int rho = 0; rho < n; ++rho)
    for (int al = 0; al < n; ++al)
      for (int be = 0; be < n; ++be) {
        Poly rhs(1);
        Word w1 = {Gen::lorentz(al, 0), Gen::lorentz(rho, be)};
        std::sort(w1.begin(), w1.end());
        rhs.add_term(single_word(w1), lam(1, Scalar::i()));
        if (al == 0)
          rhs.add_term(single_word({Gen::lorentz(rho, be)}), lam(1, -Scalar::i()));
        for (int mu = 0; mu < n; ++mu) {
          Word w2 = {Gen::lorentz(mu, be)};
          rhs.add_term(single_word(w2),
                       lam(1, Scalar::i_times(g.g(0, mu) * g.ginv(al, rho))));
        }
        rhs.add_term(unit_word(1),
                     lam(1, Scalar::i_times(-(g.g(0, be) * g.ginv(al, rho)))));
        R.add_rule(Gen::coord(rho), Gen::lorentz(al, be), rhs);
      }
  return R;
}

RelationSet commutative_ring() {
  RelationSet R;
  R.admit(Gen::bcoord());
  R.add_contraction(Gen::exp_b(+1), Gen::exp_b(-1));
  for (int mu = 0; mu < 3; ++mu) R.admit(Gen::coord(mu));
  return R;
}

Poly random_poly(std::mt19937_64& rng, const std::vector<Gen>& gens,
                 int max_terms, int max_len) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  Poly p(1);
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Word w;
    const int l = len(rng);
    for (int j = 0; j < l; ++j) w.push_back(gens[pick(rng)]);
    Scalar c(Rational(coef(rng)), Rational(coef(rng)));
    p.add_term(single_word(w), Series(c, N));
  }
  return p;
}

}  // namespace

TEST_CASE("scalar field arithmetic") {
  Scalar a(Rational(1, 2), Rational(-3));
  Scalar b(Rational(2), Rational(1, 5));
  CHECK(a + b - b == a);
  CHECK((a * b) / b == a);
  CHECK(a * a.inverse() == Scalar(1));
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(a.conj().conj() == a);
  CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("series ring and inverse") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Series s(N), t(N);
    for (int k = 0; k <= N; ++k) {
      s.set_coeff(k, Scalar(Rational(coef(rng)), Rational(coef(rng))));
      t.set_coeff(k, Scalar(Rational(coef(rng))));
    }
    if (s.coeff(0).is_zero()) s.set_coeff(0, Scalar(1));
    CHECK(s * s.inverse() == Series::one(N));
    CHECK((s + t) - t == s);
    CHECK(s * t == t * s);
  }
  Series z(N);
  z.set_coeff(1, Scalar(3));
  CHECK(z.shift_down() == Series(Scalar(3), N - 1));
  Series bad = Series::one(N);
  CHECK_THROWS_AS(bad.shift_down(), std::domain_error);
  CHECK_THROWS_AS(bad.coeff(0).is_zero() ? bad : Series(Scalar(0), N).inverse(),
                  std::domain_error);
}

TEST_CASE("normal form: kappa-Poincare coordinate example") {
  Metric g = Metric::minkowski(2);
  RelationSet R = poincare_group_rels_n2(g);

  // a^1 a^0 -> a^0 a^1 - (i/kappa) a^1
  Poly x = Poly::word({Gen::coord(1), Gen::coord(0)}, N);
  Poly nf = normal_form(x, R);
  Poly expected = Poly::word({Gen::coord(0), Gen::coord(1)}, N);
  expected.add_term(single_word({Gen::coord(1)}), lam(1, -Scalar::i()));
  CHECK(nf == expected);

  // idempotence on the example and on random elements
  CHECK(normal_form(nf, R) == nf);

  std::vector<Gen> gens = {Gen::lorentz(0, 0), Gen::lorentz(0, 1),
                           Gen::lorentz(1, 0), Gen::lorentz(1, 1),
                           Gen::coord(0), Gen::coord(1)};
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = random_poly(rng, gens, 3, 5);
    Poly q = normal_form(p, R);
    CHECK(normal_form(q, R) == q);
  }
}

TEST_CASE("normal form: contraction rule") {
  RelationSet R = commutative_ring();
  Poly x = Poly::word({Gen::exp_b(+1), Gen::exp_b(-1)}, N);
  CHECK(normal_form(x, R) == Poly::unit(N));
  Poly y = Poly::word({Gen::exp_b(-1), Gen::exp_b(+1)}, N);
  CHECK(normal_form(y, R) == Poly::unit(N));
  // e^b e^b e^-b -> e^b
  Poly z = Poly::word({Gen::exp_b(+1), Gen::exp_b(+1), Gen::exp_b(-1)}, N);
  CHECK(normal_form(z, R) == Poly::word({Gen::exp_b(+1)}, N));
}

TEST_CASE("normal form: unknown generator is a configuration error") {
  RelationSet R = commutative_ring();
  Poly x = Poly::word({Gen::dilatation()}, N);
  CHECK_THROWS_AS(normal_form(x, R), ConfigError);
}

TEST_CASE("rewriting respects associativity and confluence on samples") {
  Metric g = Metric::minkowski(2);
  RelationSet R = poincare_group_rels_n2(g);
  std::vector<Gen> gens = {Gen::lorentz(0, 0), Gen::lorentz(0, 1),
                           Gen::lorentz(1, 0), Gen::lorentz(1, 1),
                           Gen::coord(0), Gen::coord(1)};
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Poly x = random_poly(rng, gens, 2, 3);
    Poly y = random_poly(rng, gens, 2, 3);
    Poly z = random_poly(rng, gens, 2, 3);
    CHECK(normal_form(x * (y * z), R) == normal_form((x * y) * z, R));
  }
  // two admissible rule orders agree on words of length <= 5
  std::uniform_int_distribution<int> pick(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    Word w;
    for (int j = 0; j < 5; ++j) w.push_back(gens[pick(rng)]);
    Poly p = Poly::word(w, N);
    CHECK(normal_form(p, R, Strategy::Leftmost) ==
          normal_form(p, R, Strategy::Rightmost));
  }
}

TEST_CASE("commutator") {
  Metric g = Metric::minkowski(2);
  RelationSet R = poincare_group_rels_n2(g);
  Poly a0 = Poly::gen(Gen::coord(0), N);
  Poly a1 = Poly::gen(Gen::coord(1), N);
  // [a^0, a^1] = (i/kappa) a^1
  CHECK(commutator(a0, a1, R) ==
        Poly::term(single_word({Gen::coord(1)}), lam(1, Scalar::i())));
  // [L^0_0, L^1_1] = 0
  CHECK(commutator(Poly::gen(Gen::lorentz(0, 0), N),
                   Poly::gen(Gen::lorentz(1, 1), N), R)
            .is_zero());
  // [x, x] = 0
  std::mt19937_64 rng(5);
  std::vector<Gen> gens = {Gen::lorentz(0, 1), Gen::coord(0), Gen::coord(1)};
  for (int trial = 0; trial < 20; ++trial) {
    Poly x = random_poly(rng, gens, 3, 3);
    CHECK(commutator(x, x, R).is_zero());
  }
}

TEST_CASE("exp_series") {
  RelationSet R;
  R.admit(Gen::momentum(0));
  R.admit(Gen::momentum(1));
  const Gen P0 = Gen::momentum(0);

  Poly x(1);
  x.add_term(single_word({P0}), lam(1, Scalar(-1)));  // -lam P_0

  Poly e = exp_series(x, R, 2);
  Poly expected = Poly::unit(2);
  expected.add_term(single_word({P0}), Series::lambda_pow(1, Scalar(-1), 2));
  expected.add_term(single_word({P0, P0}),
                    Series::lambda_pow(2, Scalar(Rational(1, 2)), 2));
  CHECK(e == expected);

  CHECK(exp_series(Poly(1), R, N) == Poly::unit(N));

  // exp(-lam P0) * exp(lam P0) = 1 mod lam^3
  Poly y(1);
  y.add_term(single_word({P0}), Series::lambda_pow(1, Scalar(1), 2));
  CHECK(normal_form(e * exp_series(y, R, 2), R) == Poly::unit(2));

  // lam-degree-0 term violates the precondition
  Poly bad = Poly::gen(P0, N);
  CHECK_THROWS_AS(exp_series(bad, R, N), ConfigError);
}

TEST_CASE("apply_hom") {
  Metric g = Metric::minkowski(2);
  RelationSet R = poincare_group_rels_n2(g);

  // Delta L^mu_nu = L^mu_al (x) L^al_nu extended to products
  GenMap delta;
  delta.out_arity = 2;
  for (int mu = 0; mu < 2; ++mu) {
    for (int nu = 0; nu < 2; ++nu) {
      Poly img(2);
      for (int al = 0; al < 2; ++al) {
        TWord w = unit_word(2);
        w.slots[0] = {Gen::lorentz(mu, al)};
        w.slots[1] = {Gen::lorentz(al, nu)};
        img.add_term(w, Series::one(N));
      }
      delta.img[Gen::lorentz(mu, nu)] = img;
    }
  }
  Poly in = Poly::gen(Gen::lorentz(0, 1), N);
  Poly out = apply_hom(in, delta, R, N);
  CHECK(out.arity() == 2);
  CHECK(out.term_count() == 2);

  // multiplicative counit: eps(a^0 a^1) = 0
  std::map<Gen, Scalar> eps;
  for (int mu = 0; mu < 2; ++mu) {
    eps[Gen::coord(mu)] = Scalar(0);
    for (int nu = 0; nu < 2; ++nu)
      eps[Gen::lorentz(mu, nu)] = Scalar(mu == nu ? 1 : 0);
  }
  CHECK(counit_word({Gen::coord(0), Gen::coord(1)}, eps) == Scalar(0));
  CHECK(counit_word({Gen::lorentz(0, 0), Gen::lorentz(1, 1)}, eps) == Scalar(1));

  // identity map
  GenMap id = GenMap::identity(N);
  Poly p = Poly::word({Gen::coord(1), Gen::coord(0)}, N);
  CHECK(apply_hom(p, id, R, N) == normal_form(p, R));

  // missing image is a configuration error
  GenMap partial;
  partial.out_arity = 1;
  CHECK_THROWS_AS(apply_hom(p, partial, R, N), ConfigError);
}

TEST_CASE("star involution") {
  Poly p = Poly::word({Gen::coord(1), Gen::coord(0)}, N);
  p.add_term(single_word({Gen::coord(1)}), lam(1, Scalar::i()));
  Poly s = star(p);
  Poly expected = Poly::word({Gen::coord(0), Gen::coord(1)}, N);
  expected.add_term(single_word({Gen::coord(1)}), lam(1, -Scalar::i()));
  CHECK(s == expected);
  CHECK(star(star(p)) == p);
}
