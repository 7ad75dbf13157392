#include "kappa/qalg.hpp"

namespace kappa {

namespace {

Poly div_lambda(const Poly& p) {
  try {
    return p.shifted_down();
  } catch (const std::domain_error&) {
    throw ConfigError(
        "kappa-prefactor left a lam^-1 residue (relation transcription "
        "error)");
  }
}

struct Builder {
  const Metric& g;
  const int N;        // requested order
  const int Nw;       // working order for the 1/lam cancellations
  const bool weyl;
  AlgebraPresentation A;
  Poly E{1}, E2{1};   // e^{-P0/kappa}, e^{-2P0/kappa} at work order

  Builder(const Metric& metric, int order, bool with_d)
      : g(metric),
        N(order),
        Nw(order + 2),
        weyl(with_d),
        A{with_d ? AlgebraKind::Weyl : AlgebraKind::Poincare,
          metric,
          order,
          {},
          {},
          {},
          {}} {}

  Poly mom(int mu) const { return Poly::gen(Gen::momentum(mu), Nw); }

  Poly rot(int a, int b) const {
    if (a == b) return Poly(1);
    if (a < b) return Poly::gen(Gen::rotation(a, b), Nw);
    return -Poly::gen(Gen::rotation(b, a), Nw);
  }

  // i * c * lam^k * p
  Poly ic(const Rational& c, int k, const Poly& p) const {
    return p.scaled(Series::lambda_pow(k, Scalar::i_times(c), Nw));
  }

  void build() {
    const int n = g.dim();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) A.gens.push_back(Gen::rotation(a, b));
    for (int mu = 0; mu < n; ++mu) A.gens.push_back(Gen::momentum(mu));
    if (weyl) A.gens.push_back(Gen::dilatation());
    for (const auto& x : A.gens) A.rels.admit(x);

    Poly x(1);
    x.add_term(single_word({Gen::momentum(0)}),
               Series::lambda_pow(1, Scalar(-1), Nw));
    E = exp_series(x, A.rels, Nw);
    E2 = exp_series(x + x, A.rels, Nw);

    build_rotation_rules();
    build_momentum_rules();
    if (weyl) build_dilatation_rules();
    build_coproducts();
    for (const auto& x2 : A.gens) A.counit[x2] = Scalar(0);
  }

  // [M^{ab}, M^{cd}] = i(g^{ad} M^{bc} - g^{bd} M^{ac}
  //                      + g^{bc} M^{ad} - g^{ac} M^{bd})
  Poly bracket_mm(int a, int b, int c, int d) const {
    Poly out(1);
    out += ic(g.ginv(a, d), 0, rot(b, c));
    out += ic(-g.ginv(b, d), 0, rot(a, c));
    out += ic(g.ginv(b, c), 0, rot(a, d));
    out += ic(-g.ginv(a, c), 0, rot(b, d));
    return out;
  }

  void build_rotation_rules() {
    const int n = g.dim();
    std::vector<std::pair<int, int>> rots;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) rots.push_back({a, b});
    for (size_t i = 0; i < rots.size(); ++i)
      for (size_t j = 0; j < i; ++j) {
        // Gen order: rots[i] > rots[j] for i > j (lex)
        Poly rhs = bracket_mm(rots[i].first, rots[i].second, rots[j].first,
                              rots[j].second);
        A.rels.add_rule(Gen::rotation(rots[i].first, rots[i].second),
                        Gen::rotation(rots[j].first, rots[j].second),
                        normal_form(rhs, A.rels).truncated(N));
      }
    if (weyl) {
      // [M^{mu nu}, D] = 0: nothing to register (commuting pairs are
      // implicit), but D < Rotation in the generator order already.
    }
  }

  // [M^{i0}, P_0] and [M^{i0}, P_k] per the deformed displays; Latin
  // indices run over 1..n-1.
  Poly bracket_boost_p(int i, int mu) const {
    const int n = g.dim();
    Poly one = Poly::unit(Nw);
    if (mu == 0) {
      // i kappa g^{i0} (1 - E) + i g^{ik} P_k
      Poly out = ic(g.ginv(i, 0), 0, div_lambda(one - E));
      for (int k = 1; k < n; ++k) out += ic(g.ginv(i, k), 0, mom(k));
      return out;
    }
    const int k = mu;
    // -i kappa/2 g^{00} d^i_k (1 - E2) - i d^i_k g^{0s} P_s E
    // + i g^{0i} P_k (E - 1) + i/(2 kappa) d^i_k g^{rs} P_r P_s
    // - i/kappa g^{is} P_s P_k
    Poly out(1);
    if (i == k) {
      out += ic(Rational(-1, 2) * g.ginv(0, 0), 0, div_lambda(one - E2));
      for (int s = 1; s < n; ++s)
        out += ic(-g.ginv(0, s), 0, mom(s) * E);
      for (int r = 1; r < n; ++r)
        for (int s = 1; s < n; ++s)
          out += ic(Rational(1, 2) * g.ginv(r, s), 1, mom(r) * mom(s));
    }
    out += ic(g.ginv(0, i), 0, mom(k) * (E - one));
    for (int s = 1; s < n; ++s)
      out += ic(-g.ginv(i, s), 1, mom(s) * mom(k));
    return out;
  }

  // [M^{ij}, P_mu], i,j >= 1
  Poly bracket_rot_p(int i, int j, int mu) const {
    if (mu == 0) return Poly(1);
    const int n = g.dim();
    const int k = mu;
    Poly out(1);
    // i kappa (d^j_k g^{0i} - d^i_k g^{0j})(1 - E)
    Rational c(0);
    if (j == k) c += g.ginv(0, i);
    if (i == k) c -= g.ginv(0, j);
    if (c != 0) out += ic(c, 0, div_lambda(Poly::unit(Nw) - E));
    // + i (d^j_k g^{is} - d^i_k g^{js}) P_s
    for (int s = 1; s < n; ++s) {
      Rational c2(0);
      if (j == k) c2 += g.ginv(i, s);
      if (i == k) c2 -= g.ginv(j, s);
      if (c2 != 0) out += ic(c2, 0, mom(s));
    }
    return out;
  }

  void build_momentum_rules() {
    const int n = g.dim();
    for (int mu = 0; mu < n; ++mu) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          // rule (P_mu, M^{ab}): rhs = [P_mu, M^{ab}] = -[M^{ab}, P_mu]
          Poly mp = (a == 0) ? -bracket_boost_p(b, mu)  // M^{0b} = -M^{b0}
                             : bracket_rot_p(a, b, mu);
          A.rels.add_rule(Gen::momentum(mu), Gen::rotation(a, b),
                          normal_form(-mp, A.rels).truncated(N));
        }
    }
  }

  // [D, P_0] = i kappa (1 - E)
  // [D, P_i] = i P_i E + i kappa/2 g^{00} g_{i0} (1-E)^2
  //          + i g_{0i} g^{0s} P_s (1-E) + i/(2 kappa) g_{0i} g^{rs} P_r P_s
  void build_dilatation_rules() {
    const int n = g.dim();
    Poly one = Poly::unit(Nw);
    for (int mu = 0; mu < n; ++mu) {
      Poly dp(1);
      if (mu == 0) {
        dp = ic(1, 0, div_lambda(one - E));
      } else {
        const int i = mu;
        dp = ic(1, 0, mom(i) * E);
        if (g.g(i, 0) != 0) {
          dp += ic(Rational(1, 2) * g.ginv(0, 0) * g.g(i, 0), 0,
                   div_lambda((one - E) * (one - E)));
          for (int s = 1; s < n; ++s)
            dp += ic(g.g(0, i) * g.ginv(0, s), 0, mom(s) * (one - E));
          for (int r = 1; r < n; ++r)
            for (int s = 1; s < n; ++s)
              dp += ic(Rational(1, 2) * g.g(0, i) * g.ginv(r, s), 1,
                       mom(r) * mom(s));
        }
      }
      A.rels.add_rule(Gen::momentum(mu), Gen::dilatation(),
                      normal_form(-dp, A.rels).truncated(N));
    }
  }

  void add_tensor(Poly* d, const Poly& left, const Poly& right,
                  const Series& coeff) const {
    Poly t = left.embedded(0, 2) * right.embedded(1, 2);
    *d += t.scaled(coeff);
  }

  void build_coproducts() {
    const int n = g.dim();
    Poly one = Poly::unit(N);
    Poly Et = E.truncated(N);
    // Delta P_0 = P_0 (x) 1 + 1 (x) P_0 ; Delta P_k = P_k (x) E + 1 (x) P_k
    for (int mu = 0; mu < n; ++mu) {
      Poly d(2);
      Poly p = Poly::gen(Gen::momentum(mu), N);
      add_tensor(&d, p, mu == 0 ? one : Et, Series::one(N));
      add_tensor(&d, one, p, Series::one(N));
      A.coproduct[Gen::momentum(mu)] = d;
    }
    // Delta M^{ij} primitive; Delta M^{0i} = 1 (x) M^{0i} + M^{0i} (x) E
    //   + (1/kappa) M^{ij} (x) P_j   (from M^{i0} = -M^{0i})
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Poly d(2);
        Poly m = Poly::gen(Gen::rotation(a, b), N);
        if (a > 0) {
          add_tensor(&d, m, one, Series::one(N));
          add_tensor(&d, one, m, Series::one(N));
        } else {
          const int i = b;
          add_tensor(&d, one, m, Series::one(N));
          add_tensor(&d, m, Et, Series::one(N));
          for (int j = 1; j < n; ++j) {
            if (j == i) continue;
            Poly rij = rotation_poly_at(i, j, N);
            add_tensor(&d, rij, Poly::gen(Gen::momentum(j), N),
                       Series::lambda_pow(1, Scalar(1), N));
          }
        }
        A.coproduct[Gen::rotation(a, b)] = d;
      }
    if (weyl) {
      // Delta D = D (x) 1 + 1 (x) D - g_{0i} M^{i0} (x) (1 - E)
      //           - (1/kappa) g_{0i} M^{ik} (x) P_k
      Poly d(2);
      Poly D = Poly::gen(Gen::dilatation(), N);
      add_tensor(&d, D, one, Series::one(N));
      add_tensor(&d, one, D, Series::one(N));
      for (int i = 1; i < n; ++i) {
        if (g.g(0, i) == 0) continue;
        // M^{i0} = -M^{0i}
        add_tensor(&d, rotation_poly_at(0, i, N), one - Et,
                   Series(Scalar(g.g(0, i)), N));
        for (int k = 1; k < n; ++k) {
          if (k == i) continue;
          add_tensor(&d, rotation_poly_at(i, k, N),
                     Poly::gen(Gen::momentum(k), N),
                     Series::lambda_pow(1, Scalar(-g.g(0, i)), N));
        }
      }
      A.coproduct[Gen::dilatation()] = d;
    }
  }

  Poly rotation_poly_at(int a, int b, int order) const {
    if (a == b) return Poly(1);
    if (a < b) return Poly::gen(Gen::rotation(a, b), order);
    return -Poly::gen(Gen::rotation(b, a), order);
  }
};

std::string kind_params(const AlgebraPresentation& A) {
  return std::string(A.kind == AlgebraKind::Weyl ? "kappa-weyl-algebra"
                                                 : "kappa-poincare-algebra") +
         " n=" + std::to_string(A.g.dim()) +
         " order=" + std::to_string(A.order);
}

}  // namespace

GenMap AlgebraPresentation::coproduct_map() const {
  GenMap m;
  m.out_arity = 2;
  m.img = coproduct;
  return m;
}

Poly AlgebraPresentation::rotation_poly(int a, int b) const {
  if (a == b) return Poly(1);
  if (a < b) return Poly::gen(Gen::rotation(a, b), order);
  return -Poly::gen(Gen::rotation(b, a), order);
}

AlgebraPresentation build_kappa_poincare_algebra(const Metric& g, int order) {
  Builder b(g, order, false);
  b.build();
  return std::move(b.A);
}

AlgebraPresentation build_kappa_weyl_algebra(const Metric& g, int order) {
  Builder b(g, order, true);
  b.build();
  return std::move(b.A);
}

std::vector<CheckResult> algebra_axiom_suite(const AlgebraPresentation& A) {
  std::vector<CheckResult> out;
  const std::string params = kind_params(A);
  const GenMap delta = A.coproduct_map();
  const GenMap id = GenMap::identity(A.order);

  out.push_back(run_check(
      "qalg/jacobi", params, [&](std::string* detail, int* bad) {
        const auto& gs = A.gens;
        for (size_t i = 0; i < gs.size(); ++i)
          for (size_t j = i + 1; j < gs.size(); ++j)
            for (size_t k = j + 1; k < gs.size(); ++k) {
              Poly px = Poly::gen(gs[i], A.order);
              Poly py = Poly::gen(gs[j], A.order);
              Poly pz = Poly::gen(gs[k], A.order);
              Poly res =
                  commutator(px, commutator(py, pz, A.rels), A.rels) +
                  commutator(pz, commutator(px, py, A.rels), A.rels) +
                  commutator(py, commutator(pz, px, A.rels), A.rels);
              if (!res.is_zero()) {
                *detail = "triple (" + gs[i].str() + ", " + gs[j].str() +
                          ", " + gs[k].str() + "): residual " + res.str();
                *bad = res.first_nonzero_lambda_order();
                return false;
              }
            }
        return true;
      }));

  out.push_back(run_check(
      "qalg/delta-homomorphism", params, [&](std::string* detail, int* bad) {
        bool ok = true;
        for (size_t i = 0; i < A.gens.size(); ++i)
          for (size_t j = 0; j < i; ++j) {
            const Gen& x = A.gens[i];
            const Gen& y = A.gens[j];
            Poly lhs = commutator(A.coproduct.at(x), A.coproduct.at(y), A.rels);
            Poly c =
                commutator(Poly::gen(x, A.order), Poly::gen(y, A.order), A.rels);
            Poly rhs = apply_hom(c, delta, A.rels, A.order);
            Poly res = lhs - rhs;
            if (!res.is_zero()) {
              if (ok)
                *detail = "pair (" + x.str() + ", " + y.str() + "): residual " +
                          res.str();
              ok = false;
              int o = res.first_nonzero_lambda_order();
              if (*bad < 0 || o < *bad) *bad = o;
            }
          }
        return ok;
      }));

  out.push_back(run_check(
      "qalg/coassociativity", params, [&](std::string* detail, int* bad) {
        for (const auto& x : A.gens) {
          const Poly& d = A.coproduct.at(x);
          Poly lhs = apply_hom(d, {delta, id}, A.rels, A.order);
          Poly rhs = apply_hom(d, {id, delta}, A.rels, A.order);
          Poly res = lhs - rhs;
          if (!res.is_zero()) {
            *detail = "generator " + x.str() + ": residual " + res.str();
            *bad = res.first_nonzero_lambda_order();
            return false;
          }
        }
        return true;
      }));

  out.push_back(run_check(
      "qalg/counit", params, [&](std::string* detail, int*) {
        for (const auto& x : A.gens) {
          const Poly& d = A.coproduct.at(x);
          Poly l = normal_form(apply_counit(d, 0, A.counit), A.rels);
          Poly r = normal_form(apply_counit(d, 1, A.counit), A.rels);
          Poly gp = Poly::gen(x, A.order);
          if (!(l == gp) || !(r == gp)) {
            *detail = "generator " + x.str();
            return false;
          }
        }
        return true;
      }));

  return out;
}

bool classical_limit_matches(const AlgebraPresentation& A,
                             std::string* detail) {
  const Metric& g = A.g;
  const int n = g.dim();
  LieAlgebra L = (A.kind == AlgebraKind::Weyl) ? build_weyl(g)
                                               : build_poincare(g);

  // canonical generator -> coefficient vector over L's (all-lower) basis
  auto to_lie = [&](const Gen& x) {
    std::vector<Scalar> v(L.dim());
    if (x.sort == Sort::Rotation) {
      for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu) {
          Rational c = g.ginv(x.a, mu) * g.ginv(x.b, nu) -
                       g.ginv(x.a, nu) * g.ginv(x.b, mu);
          if (c != 0) v[L.index_of(Gen::rotation(mu, nu))] = Scalar(c);
        }
    } else if (x.sort == Sort::Momentum) {
      v[L.index_of(Gen::momentum(x.a))] = Scalar(1);
    } else {
      v[L.index_of(Gen::dilatation())] = Scalar(1);
    }
    return v;
  };

  for (size_t i = 0; i < A.gens.size(); ++i)
    for (size_t j = 0; j < A.gens.size(); ++j) {
      if (i == j) continue;
      const Gen& x = A.gens[i];
      const Gen& y = A.gens[j];
      Poly c = commutator(Poly::gen(x, A.order), Poly::gen(y, A.order), A.rels);
      Poly c0 = c.lambda_part(0);
      std::vector<Scalar> got(L.dim());
      for (const auto& [w, cf] : c0.terms()) {
        if (w.degree() > 1) {
          if (detail)
            *detail = "lam^0 part of [" + x.str() + ", " + y.str() +
                      "] is not linear";
          return false;
        }
        if (w.degree() == 0) {
          if (detail)
            *detail = "lam^0 part of [" + x.str() + ", " + y.str() +
                      "] has a constant term";
          return false;
        }
        const Gen& z = w.slots[0][0];
        auto zv = to_lie(z);
        for (int k = 0; k < L.dim(); ++k) got[k] += cf.coeff(0) * zv[k];
      }
      // expected: bracket of the converted elements in L
      auto xv = to_lie(x);
      auto yv = to_lie(y);
      std::vector<Scalar> want(L.dim());
      for (int a = 0; a < L.dim(); ++a) {
        if (xv[a].is_zero()) continue;
        for (int b = 0; b < L.dim(); ++b) {
          if (yv[b].is_zero()) continue;
          for (int k = 0; k < L.dim(); ++k)
            want[k] += xv[a] * yv[b] * L.f(a, b, k);
        }
      }
      for (int k = 0; k < L.dim(); ++k)
        if (got[k] != want[k]) {
          if (detail)
            *detail = "lam^0 of [" + x.str() + ", " + y.str() +
                      "] mismatches the classical bracket at " +
                      L.basis()[k].str() + " (got " + got[k].str() +
                      ", want " + want[k].str() + ")";
          return false;
        }
    }
  return true;
}

namespace {

Poly convolution(const AlgebraPresentation& A, const std::map<Gen, Poly>& S,
                 const Gen& x, bool s_left) {
  const Poly& d = A.coproduct.at(x);
  Poly out(1);
  for (const auto& [w, c] : d.terms()) {
    Poly left = s_left ? apply_antihom(Poly::word(w.slots[0], A.order), S,
                                       A.rels, A.order)
                       : Poly::word(w.slots[0], A.order);
    Poly right = s_left ? Poly::word(w.slots[1], A.order)
                        : apply_antihom(Poly::word(w.slots[1], A.order), S,
                                        A.rels, A.order);
    out += (left * right).scaled(c);
  }
  return normal_form(out, A.rels);
}

}  // namespace

AntipodeResult derive_antipode(const AlgebraPresentation& A) {
  AntipodeResult R;
  // dependency order: momenta, spatial rotations, boosts, dilatation
  std::vector<Gen> order;
  for (const auto& x : A.gens)
    if (x.sort == Sort::Momentum) order.push_back(x);
  for (const auto& x : A.gens)
    if (x.sort == Sort::Rotation && x.a > 0) order.push_back(x);
  for (const auto& x : A.gens)
    if (x.sort == Sort::Rotation && x.a == 0) order.push_back(x);
  for (const auto& x : A.gens)
    if (x.sort == Sort::Dilatation) order.push_back(x);

  for (const auto& x : A.gens) R.antipode[x] = -Poly::gen(x, A.order);

  for (const auto& x : order) {
    for (int m = 1; m <= A.order; ++m) {
      Poly res = convolution(A, R.antipode, x, true);
      Poly rm = res.lambda_part(m);
      if (rm.is_zero()) continue;
      Poly& s = R.antipode[x];
      for (const auto& [w, c] : rm.terms())
        s.add_term(w, Series::lambda_pow(m, -c.coeff(0), A.order));
    }
  }

  R.ok = true;
  for (const auto& x : A.gens) {
    Poly l = convolution(A, R.antipode, x, true);
    Poly r = convolution(A, R.antipode, x, false);
    if (!l.is_zero() || !r.is_zero()) {
      R.ok = false;
      R.detail = "antipode axiom fails on " + x.str() + " (left " + l.str() +
                 ", right " + r.str() + ")";
      return R;
    }
  }

  R.antihom_ok = true;
  for (size_t i = 0; i < A.gens.size() && R.antihom_ok; ++i)
    for (size_t j = 0; j < i && R.antihom_ok; ++j) {
      const Gen& x = A.gens[i];
      const Gen& y = A.gens[j];
      Poly lhs = apply_antihom(
          commutator(Poly::gen(x, A.order), Poly::gen(y, A.order), A.rels),
          R.antipode, A.rels, A.order);
      Poly rhs = commutator(R.antipode.at(y), R.antipode.at(x), A.rels);
      if (!(lhs == rhs)) {
        R.antihom_ok = false;
        R.detail = "S is not an anti-homomorphism on (" + x.str() + ", " +
                   y.str() + ")";
      }
    }
  return R;
}

}  // namespace kappa
