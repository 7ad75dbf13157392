#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kappa/poisson.hpp"

using namespace kappa;

namespace {

constexpr int N = 4;

Poly random_coord_poly(std::mt19937_64& rng, const PoissonStructure& P,
                       int max_terms, int max_len) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(
      0, static_cast<int>(P.coordinates.size()) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  Poly p(1);
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Word w;
    const int l = len(rng);
    for (int j = 0; j < l; ++j) w.push_back(P.coordinates[pick(rng)]);
    p.add_term(single_word(w), Series(Scalar(Rational(coef(rng))), N));
  }
  return normal_form(p, P.ring);
}

}  // namespace

TEST_CASE("invariant field examples") {
  Metric g = Metric::light_cone(3);
  PoissonStructure P = build_poisson(GroupKind::Weyl, g, N);

  // X_R^al (a^be) = g^{al be}
  for (size_t i = 0; i < P.labels.size(); ++i) {
    if (P.labels[i].kind != FieldLabel::Kind::Translation) continue;
    const int al = P.labels[i].a;
    for (int be = 0; be < 3; ++be) {
      Poly got = P.XR[i].apply(Poly::gen(Gen::coord(be), N), P.ring);
      Poly want(1);
      if (g.ginv(al, be) != 0)
        want.add_term(unit_word(1), Series(Scalar(g.ginv(al, be)), N));
      CHECK(got == want);
    }
    // Weyl X_L^al (a^mu) = e^b Lam^{mu al}
    for (int mu = 0; mu < 3; ++mu) {
      Poly got = P.XL[i].apply(Poly::gen(Gen::coord(mu), N), P.ring);
      Poly want(1);
      for (int rho = 0; rho < 3; ++rho)
        if (g.ginv(rho, al) != 0) {
          Word w = {Gen::lorentz(mu, rho), Gen::exp_b(+1)};
          want.add_term(single_word(w), Series(Scalar(g.ginv(rho, al)), N));
        }
      CHECK(got == normal_form(want, P.ring));
    }
  }

  // every field kills the constant 1
  for (size_t i = 0; i < P.labels.size(); ++i) {
    CHECK(P.XL[i].apply(Poly::unit(N), P.ring).is_zero());
    CHECK(P.XR[i].apply(Poly::unit(N), P.ring).is_zero());
  }
}

TEST_CASE("derivations satisfy Leibniz on random polynomials") {
  Metric g = Metric::minkowski(2);
  PoissonStructure P = build_poisson(GroupKind::Weyl, g, N);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    Poly f = random_coord_poly(rng, P, 2, 3);
    Poly h = random_coord_poly(rng, P, 2, 3);
    for (size_t i = 0; i < P.labels.size(); ++i) {
      const Derivation& X = P.XL[i];
      Poly lhs = X.apply(normal_form(f * h, P.ring), P.ring);
      Poly rhs = normal_form(X.apply(f, P.ring) * h + f * X.apply(h, P.ring),
                             P.ring);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("left and right fields commute") {
  std::string why;
  for (int n = 2; n <= 3; ++n) {
    PoissonStructure P =
        build_poisson(GroupKind::Weyl, Metric::light_cone(n), N);
    CHECK_MESSAGE(lr_commute_check(P, &why), why);
    PoissonStructure Q =
        build_poisson(GroupKind::Poincare, Metric::minkowski(n), N);
    CHECK_MESSAGE(lr_commute_check(Q, &why), why);
  }
}

TEST_CASE("field families close on the classical structure constants") {
  std::string why;
  std::mt19937_64 rng(8);
  PoissonStructure P = build_poisson(GroupKind::Weyl, Metric::light_cone(2), N);
  CHECK_MESSAGE(field_closure_check(P, &why), why);
  PoissonStructure Q =
      build_poisson(GroupKind::Poincare, random_metric(3, rng, false), N);
  CHECK_MESSAGE(field_closure_check(Q, &why), why);
  PoissonStructure R =
      build_poisson(GroupKind::Weyl, random_metric(2, rng, true), N);
  CHECK_MESSAGE(field_closure_check(R, &why), why);
}

TEST_CASE("sklyanin bracket: normalization pins {a^0, a^1} = (1/kappa) a^1") {
  // This fixes the overall constant relating the field-basis double sum to
  // the closed-form coordinate brackets (kSklyaninNormalization).
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 6; ++trial) {
    Metric g = random_metric(2 + trial % 3, rng, trial % 2 == 0);
    PoissonStructure P = build_poisson(GroupKind::Poincare, g, N);
    Poly got = sklyanin_bracket(P, Poly::gen(Gen::coord(0), N),
                                Poly::gen(Gen::coord(1), N));
    Poly want =
        Poly::term(single_word({Gen::coord(1)}),
                   Series::lambda_pow(1, Scalar(1), N));
    CHECK(got == want);
  }
}

TEST_CASE("sklyanin bracket: antisymmetry and Lam-Lam vanishing") {
  Metric g = Metric::minkowski(3);
  PoissonStructure P = build_poisson(GroupKind::Poincare, g, N);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          CHECK(sklyanin_bracket(P, Poly::gen(Gen::lorentz(i, j), N),
                                 Poly::gen(Gen::lorentz(k, l), N))
                    .is_zero());
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    Poly f = random_coord_poly(rng, P, 2, 3);
    CHECK(sklyanin_bracket(P, f, f).is_zero());
  }
}

TEST_CASE("coordinate brackets match the closed forms") {
  // Minkowski n=4, Poincare
  {
    PoissonStructure P =
        build_poisson(GroupKind::Poincare, Metric::minkowski(4), N);
    CHECK(verify_coordinate_brackets(P).empty());
  }
  // light-cone n=4, Weyl
  {
    PoissonStructure P =
        build_poisson(GroupKind::Weyl, Metric::light_cone(4), N);
    CHECK(verify_coordinate_brackets(P).empty());
  }
  // random metrics, n in {2,3}, both kinds (the closed forms hold for any
  // metric; Jacobi is what fails off the null cone)
  std::mt19937_64 rng(2025);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      Metric g = random_metric(n, rng, trial % 2 == 0);
      PoissonStructure P = build_poisson(GroupKind::Poincare, g, N);
      auto bad = verify_coordinate_brackets(P);
      if (!bad.empty()) FAIL_CHECK(bad.front().got << " != " << bad.front().want);
      CHECK(bad.empty());
      PoissonStructure W = build_poisson(GroupKind::Weyl, g, N);
      auto badw = verify_coordinate_brackets(W);
      if (!badw.empty())
        FAIL_CHECK(badw.front().got << " != " << badw.front().want);
      CHECK(badw.empty());
    }
}

TEST_CASE("poisson jacobi identity and its Weyl violation") {
  // Poincare: holds (on the group, i.e. modulo orthogonality) for any metric
  std::mt19937_64 rng(4);
  {
    Metric g = random_metric(2, rng, false);
    PoissonStructure P = build_poisson(GroupKind::Poincare, g, N);
    OrthoReducer full(g, OrthoMode::Complete);
    for (const auto& x : P.coordinates)
      for (const auto& y : P.coordinates)
        for (const auto& z : P.coordinates)
          CHECK(full.reduces_to_zero(
              poisson_jacobi(P, Poly::gen(x, N), Poly::gen(y, N),
                             Poly::gen(z, N)),
              P.ring));
  }
  // Weyl with g00 = 0: holds
  {
    Metric g = Metric::light_cone(2);
    PoissonStructure P = build_poisson(GroupKind::Weyl, g, N);
    OrthoReducer full(g, OrthoMode::Complete);
    for (const auto& x : P.coordinates)
      for (const auto& y : P.coordinates)
        for (const auto& z : P.coordinates)
          CHECK(full.reduces_to_zero(
              poisson_jacobi(P, Poly::gen(x, N), Poly::gen(y, N),
                             Poly::gen(z, N)),
              P.ring));
  }
  // Weyl with g00 != 0: the (Lam, a, a) jacobiator equals the closed form,
  // proportional to g00 with the e^{2b}-1 profile.
  {
    Metric g = Metric::minkowski(2);
    PoissonStructure P = build_poisson(GroupKind::Weyl, g, N);
    OrthoReducer full(g, OrthoMode::Complete);
    bool some_nonzero = false;
    for (int al = 0; al < 2; ++al)
      for (int be = 0; be < 2; ++be)
        for (int rho = 0; rho < 2; ++rho)
          for (int sig = 0; sig < 2; ++sig) {
            Poly got = poisson_jacobi(
                P, Poly::gen(Gen::lorentz(al, be), N),
                Poly::gen(Gen::coord(rho), N), Poly::gen(Gen::coord(sig), N));
            Poly want = weyl_jacobi_closed_form(P, al, be, rho, sig);
            CHECK(full.reduces_to_zero(got - want, P.ring));
            if (!got.is_zero()) some_nonzero = true;
          }
    CHECK(some_nonzero);
  }
}
