#include "kappa/qgroup.hpp"

#include <optional>

namespace kappa {

namespace {

// [Lam^al_be, a^rho] = -(i/kappa)((e^b Lam^al_0 - d^al_0) Lam^rho_be
//                                 + (Lam_{0 be} - e^b g_{0 be}) g^{al rho})
// with e^b -> 1 in the Poincare case and Lam_{0 be} = g_{0 mu} Lam^mu_be.
Poly bracket_lorentz_coord(const Metric& g, bool weyl, int al, int be, int rho,
                           int order) {
  Poly acc(1);
  Word w1 = {Gen::lorentz(al, 0), Gen::lorentz(rho, be)};
  if (weyl) w1.push_back(Gen::exp_b(+1));
  acc.add_term(single_word(w1), Series::one(order));
  if (al == 0)
    acc.add_term(single_word({Gen::lorentz(rho, be)}), Series(Scalar(-1), order));
  for (int mu = 0; mu < g.dim(); ++mu) {
    Rational c = g.g(0, mu) * g.ginv(al, rho);
    if (c != 0)
      acc.add_term(single_word({Gen::lorentz(mu, be)}), Series(Scalar(c), order));
  }
  Rational c2 = g.g(0, be) * g.ginv(al, rho);
  if (c2 != 0) {
    Word w2 = weyl ? Word{Gen::exp_b(+1)} : Word{};
    acc.add_term(single_word(w2), Series(Scalar(-c2), order));
  }
  return acc.scaled(Series::lambda_pow(1, -Scalar::i(), order));
}

// [a^rho, a^sig] = (i/kappa)(d^rho_0 a^sig - d^sig_0 a^rho)
Poly bracket_coord_coord(int rho, int sig, int order) {
  Poly acc(1);
  if (rho == 0)
    acc.add_term(single_word({Gen::coord(sig)}), Series::one(order));
  if (sig == 0)
    acc.add_term(single_word({Gen::coord(rho)}), Series(Scalar(-1), order));
  return acc.scaled(Series::lambda_pow(1, Scalar::i(), order));
}

GroupPresentation build_group(GroupKind kind, const Metric& g, int order) {
  const bool weyl = kind == GroupKind::Weyl;
  const int n = g.dim();
  GroupPresentation H{kind, g, order, {}, {}, {}, {}, {}, OrthoReducer(g)};

  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) H.gens.push_back(Gen::lorentz(mu, nu));
  for (int mu = 0; mu < n; ++mu) H.gens.push_back(Gen::coord(mu));
  if (weyl) {
    H.gens.push_back(Gen::bcoord());
    H.gens.push_back(Gen::exp_b(+1));
    H.gens.push_back(Gen::exp_b(-1));
  }
  for (const auto& x : H.gens) H.rels.admit(x);
  if (weyl) H.rels.add_contraction(Gen::exp_b(+1), Gen::exp_b(-1));

  // rules keyed (hi, lo): a^rho * Lam = Lam * a^rho + [a^rho, Lam]
  for (int rho = 0; rho < n; ++rho)
    for (int al = 0; al < n; ++al)
      for (int be = 0; be < n; ++be) {
        Poly rhs = -bracket_lorentz_coord(g, weyl, al, be, rho, order);
        H.rels.add_rule(Gen::coord(rho), Gen::lorentz(al, be),
                        normal_form(rhs, H.rels));
      }
  for (int rho = 0; rho < n; ++rho)
    for (int sig = 0; sig < rho; ++sig)
      H.rels.add_rule(Gen::coord(rho), Gen::coord(sig),
                      bracket_coord_coord(rho, sig, order));

  // coproduct
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      Poly d(2);
      for (int al = 0; al < n; ++al) {
        TWord w = unit_word(2);
        w.slots[0] = {Gen::lorentz(mu, al)};
        w.slots[1] = {Gen::lorentz(al, nu)};
        d.add_term(w, Series::one(order));
      }
      H.coproduct[Gen::lorentz(mu, nu)] = d;
    }
    Poly d(2);
    for (int nu = 0; nu < n; ++nu) {
      TWord w = unit_word(2);
      w.slots[0] = weyl ? Word{Gen::lorentz(mu, nu), Gen::exp_b(+1)}
                        : Word{Gen::lorentz(mu, nu)};
      w.slots[1] = {Gen::coord(nu)};
      d.add_term(w, Series::one(order));
    }
    TWord w = unit_word(2);
    w.slots[0] = {Gen::coord(mu)};
    d.add_term(w, Series::one(order));
    H.coproduct[Gen::coord(mu)] = d;
  }
  if (weyl) {
    Poly db(2);
    TWord w1 = unit_word(2);
    w1.slots[0] = {Gen::bcoord()};
    db.add_term(w1, Series::one(order));
    TWord w2 = unit_word(2);
    w2.slots[1] = {Gen::bcoord()};
    db.add_term(w2, Series::one(order));
    H.coproduct[Gen::bcoord()] = db;
    for (int s : {+1, -1}) {
      Poly de(2);
      TWord w = unit_word(2);
      w.slots[0] = {Gen::exp_b(s)};
      w.slots[1] = {Gen::exp_b(s)};
      de.add_term(w, Series::one(order));
      H.coproduct[Gen::exp_b(s)] = de;
    }
  }

  // counit
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu)
      H.counit[Gen::lorentz(mu, nu)] = Scalar(mu == nu ? 1 : 0);
    H.counit[Gen::coord(mu)] = Scalar(0);
  }
  if (weyl) {
    H.counit[Gen::bcoord()] = Scalar(0);
    H.counit[Gen::exp_b(+1)] = Scalar(1);
    H.counit[Gen::exp_b(-1)] = Scalar(1);
  }

  // antipode: S(Lam^mu_nu) = Lam_nu^mu, S(a^mu) = -(e^-b) Lam_nu^mu a^nu
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      Poly s(1);
      for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be) {
          Rational c = g.g(nu, al) * g.ginv(be, mu);
          if (c != 0)
            s.add_term(single_word({Gen::lorentz(al, be)}),
                       Series(Scalar(c), order));
        }
      H.antipode[Gen::lorentz(mu, nu)] = s;
    }
    Poly s(1);
    for (int nu = 0; nu < n; ++nu)
      for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be) {
          Rational c = g.g(nu, al) * g.ginv(be, mu);
          if (c == 0) continue;
          Word w = {Gen::lorentz(al, be), Gen::coord(nu)};
          if (weyl) w.push_back(Gen::exp_b(-1));
          s.add_term(single_word(w), Series(Scalar(-c), order));
        }
    H.antipode[Gen::coord(mu)] = s;
  }
  if (weyl) {
    H.antipode[Gen::bcoord()] = -Poly::gen(Gen::bcoord(), order);
    H.antipode[Gen::exp_b(+1)] = Poly::gen(Gen::exp_b(-1), order);
    H.antipode[Gen::exp_b(-1)] = Poly::gen(Gen::exp_b(+1), order);
  }
  return H;
}

Series eps_of_poly(const GroupPresentation& H, const Poly& p) {
  Series acc(H.order);
  for (const auto& [w, c] : p.terms()) {
    Scalar v = counit_word(w.slots[0], H.counit);
    if (!v.is_zero()) acc += c * v;
  }
  return acc;
}

// Raw-first ideal reduction with lazy escalation to the completed basis.
class IdealReducer {
 public:
  explicit IdealReducer(const GroupPresentation& H) : H_(H) {}
  Poly reduce(const Poly& x) const {
    Poly r = H_.ortho.reduce(x, H_.rels);
    if (r.is_zero()) return r;
    if (!complete_) complete_.emplace(H_.g, OrthoMode::Complete);
    return complete_->reduce(r, H_.rels);
  }
  bool zero(const Poly& x) const { return reduce(x).is_zero(); }
  void force_complete() const {
    if (!complete_) complete_.emplace(H_.g, OrthoMode::Complete);
  }

 private:
  const GroupPresentation& H_;
  mutable std::optional<OrthoReducer> complete_;
};

// m(S (x) id) Delta g  or  m(id (x) S) Delta g (not yet reduced).
Poly antipode_convolution(const GroupPresentation& H, const Gen& g,
                          bool s_left) {
  const Poly& d = H.coproduct.at(g);
  Poly out(1);
  for (const auto& [w, c] : d.terms()) {
    Poly left = s_left ? apply_antihom(Poly::word(w.slots[0], H.order),
                                       H.antipode, H.rels, H.order)
                       : Poly::word(w.slots[0], H.order);
    Poly right = s_left ? Poly::word(w.slots[1], H.order)
                        : apply_antihom(Poly::word(w.slots[1], H.order),
                                        H.antipode, H.rels, H.order);
    out += (left * right).scaled(c);
  }
  return normal_form(out, H.rels);
}

std::string pair_str(const Gen& x, const Gen& y) {
  return "(" + x.str() + ", " + y.str() + ")";
}

}  // namespace

GenMap GroupPresentation::coproduct_map() const {
  GenMap m;
  m.out_arity = 2;
  m.img = coproduct;
  return m;
}

GroupPresentation build_kappa_poincare_group(const Metric& g, int order) {
  return build_group(GroupKind::Poincare, g, order);
}

GroupPresentation build_kappa_weyl_group(const Metric& g, int order) {
  return build_group(GroupKind::Weyl, g, order);
}

std::vector<CheckResult> hopf_axiom_suite(const GroupPresentation& H,
                                           HopfSuiteScope scope) {
  std::vector<CheckResult> out;
  const std::string kind =
      H.kind == GroupKind::Weyl ? "kappa-weyl-group" : "kappa-poincare-group";
  const std::string params = kind + " n=" + std::to_string(H.g.dim()) +
                             " order=" + std::to_string(H.order);
  const GenMap delta = H.coproduct_map();
  const GenMap id = H.identity_map();
  IdealReducer ideal(H);

  out.push_back(run_check(
      "qgroup/delta-homomorphism", params,
      [&](std::string* detail, int* bad) {
        for (size_t i = 0; i < H.gens.size(); ++i)
          for (size_t j = 0; j < i; ++j) {
            const Gen& x = H.gens[i];
            const Gen& y = H.gens[j];
            Poly lhs = commutator(H.coproduct.at(x), H.coproduct.at(y), H.rels);
            Poly c = commutator(Poly::gen(x, H.order), Poly::gen(y, H.order),
                                H.rels);
            Poly rhs = apply_hom(c, delta, H.rels, H.order);
            Poly res = ideal.reduce(lhs - rhs);
            if (!res.is_zero()) {
              *detail = "pair " + pair_str(x, y) + ": residual " + res.str();
              *bad = res.first_nonzero_lambda_order();
              return false;
            }
          }
        // contraction relation e^b e^-b = 1 maps to 1 (x) 1
        if (H.kind == GroupKind::Weyl) {
          Poly p = normal_form(H.coproduct.at(Gen::exp_b(+1)) *
                                   H.coproduct.at(Gen::exp_b(-1)),
                               H.rels);
          if (!(p == Poly::unit(H.order, 2))) {
            *detail = "Delta(e^b) Delta(e^-b) != 1 (x) 1";
            return false;
          }
        }
        return true;
      }));

  out.push_back(run_check(
      "qgroup/coassociativity", params, [&](std::string* detail, int* bad) {
        for (const auto& g : H.gens) {
          const Poly& d = H.coproduct.at(g);
          Poly lhs = apply_hom(d, {delta, id}, H.rels, H.order);
          Poly rhs = apply_hom(d, {id, delta}, H.rels, H.order);
          Poly res = lhs - rhs;
          if (!res.is_zero()) {
            *detail = "generator " + g.str() + ": residual " + res.str();
            *bad = res.first_nonzero_lambda_order();
            return false;
          }
        }
        return true;
      }));

  out.push_back(run_check(
      "qgroup/counit", params, [&](std::string* detail, int*) {
        for (const auto& g : H.gens) {
          const Poly& d = H.coproduct.at(g);
          Poly l = normal_form(apply_counit(d, 0, H.counit), H.rels);
          Poly r = normal_form(apply_counit(d, 1, H.counit), H.rels);
          Poly gp = Poly::gen(g, H.order);
          if (!(l == gp) || !(r == gp)) {
            *detail = "generator " + g.str();
            return false;
          }
        }
        return true;
      }));

  out.push_back(run_check(
      "qgroup/antipode", params, [&](std::string* detail, int* bad) {
        for (const auto& g : H.gens) {
          Poly want(1);
          Scalar e = H.counit.at(g);
          if (!e.is_zero()) want.add_term(unit_word(1), Series(e, H.order));
          for (bool s_left : {true, false}) {
            Poly got = antipode_convolution(H, g, s_left);
            Poly res = ideal.reduce(got - want);
            if (!res.is_zero()) {
              *detail = std::string(s_left ? "m(S(x)id)" : "m(id(x)S)") +
                        " on " + g.str() + ": residual " + res.str();
              *bad = res.first_nonzero_lambda_order();
              return false;
            }
          }
        }
        return true;
      }));

  out.push_back(run_check(
      "qgroup/jacobi-consistency", params, [&](std::string* detail, int* bad) {
        // Confluence witness: the jacobiator vanishes on all generator
        // triples (structurally zero triples are skipped).
        const auto& gs = H.gens;
        for (size_t i = 0; i < gs.size(); ++i)
          for (size_t j = i + 1; j < gs.size(); ++j)
            for (size_t k = j + 1; k < gs.size(); ++k) {
              if (H.rels.commute_freely(gs[i], gs[j]) &&
                  H.rels.commute_freely(gs[i], gs[k]) &&
                  H.rels.commute_freely(gs[j], gs[k]))
                continue;
              Poly res = jacobiator(H, gs[i], gs[j], gs[k]);
              if (!res.is_zero()) {
                *detail = "triple (" + gs[i].str() + ", " + gs[j].str() +
                          ", " + gs[k].str() + "): residual " + res.str();
                *bad = res.first_nonzero_lambda_order();
                return false;
              }
            }
        return true;
      }));

  if (scope == HopfSuiteScope::AxiomsOnly) return out;

  out.push_back(run_check(
      "qgroup/relation-compat", params, [&](std::string* detail, int* bad) {
        ideal.force_complete();
        for (const auto& [key, rhs] : H.rels.rules()) {
          const auto& [hi, lo] = key;
          // counit: eps of [hi,lo] - rhs reduces to -eps(rhs)
          Series er = eps_of_poly(H, rhs);
          if (!er.is_zero()) {
            *detail = "counit on relation " + pair_str(hi, lo);
            *bad = er.low_degree();
            return false;
          }
          // antipode: S is an anti-homomorphism on the relation
          Poly rel = Poly::word({hi, lo}, H.order) -
                     Poly::word({lo, hi}, H.order) - rhs;
          Poly s = apply_antihom(rel, H.antipode, H.rels, H.order);
          Poly res = ideal.reduce(s);
          if (!res.is_zero()) {
            *detail = "antipode on relation " + pair_str(hi, lo) +
                      ": residual " + res.str();
            *bad = res.first_nonzero_lambda_order();
            return false;
          }
        }
        return true;
      }));

  return out;
}

Poly jacobiator(const GroupPresentation& H, const Gen& x, const Gen& y,
                const Gen& z) {
  const int N = H.order;
  Poly px = Poly::gen(x, N), py = Poly::gen(y, N), pz = Poly::gen(z, N);
  Poly out = commutator(px, commutator(py, pz, H.rels), H.rels);
  out += commutator(pz, commutator(px, py, H.rels), H.rels);
  out += commutator(py, commutator(pz, px, H.rels), H.rels);
  return out;
}

Poly weyl_jacobiator_closed_form(const GroupPresentation& H, int al, int be,
                                 int rho, int sig) {
  const Metric& g = H.g;
  const int N = H.order;
  Poly factor(1);  // 1 - e^{2b}
  factor.add_term(unit_word(1), Series::one(N));
  factor.add_term(single_word({Gen::exp_b(+1), Gen::exp_b(+1)}),
                  Series(Scalar(-1), N));
  Poly lin(1);
  if (g.ginv(al, sig) != 0)
    lin.add_term(single_word({Gen::lorentz(rho, be)}),
                 Series(Scalar(g.ginv(al, sig)), N));
  if (g.ginv(al, rho) != 0)
    lin.add_term(single_word({Gen::lorentz(sig, be)}),
                 Series(Scalar(-g.ginv(al, rho)), N));
  return normal_form(
      (factor * lin).scaled(Series::lambda_pow(2, Scalar(g.g(0, 0)), N)),
      H.rels);
}

std::vector<CheckResult> star_reality_check(const GroupPresentation& H) {
  std::vector<CheckResult> out;
  const std::string params =
      (H.kind == GroupKind::Weyl ? "kappa-weyl-group" : "kappa-poincare-group");
  out.push_back(run_check(
      "qgroup/star-reality", params, [&](std::string* detail, int*) {
        for (const auto& [key, rhs] : H.rels.rules()) {
          const auto& [hi, lo] = key;
          Poly rel = Poly::word({hi, lo}, H.order) -
                     Poly::word({lo, hi}, H.order) - rhs;
          Poly s = normal_form(star(rel), H.rels);
          if (!s.is_zero()) {
            *detail = "relation " + pair_str(hi, lo) + " unstable: " + s.str();
            return false;
          }
        }
        if (H.kind == GroupKind::Weyl) {
          Poly rel = Poly::word({Gen::exp_b(+1), Gen::exp_b(-1)}, H.order) -
                     Poly::unit(H.order);
          if (!normal_form(star(rel), H.rels).is_zero()) {
            *detail = "contraction relation unstable under *";
            return false;
          }
        }
        return true;
      }));
  return out;
}

Poly substitute_b_zero(const Poly& x) {
  Poly out(x.arity());
  for (const auto& [w, c] : x.terms()) {
    TWord nw = unit_word(x.arity());
    bool killed = false;
    for (int s = 0; s < x.arity() && !killed; ++s)
      for (const auto& letter : w.slots[s]) {
        if (letter.sort == Sort::BCoord) {
          killed = true;
          break;
        }
        if (letter.sort == Sort::ExpB) continue;
        nw.slots[s].push_back(letter);
      }
    if (!killed) out.add_term(nw, c);
  }
  return out;
}

bool weyl_reduces_to_poincare_at_b0(const GroupPresentation& W,
                                    const GroupPresentation& P,
                                    std::string* detail) {
  for (const auto& [key, rhs] : P.rels.rules()) {
    const Poly* wr = W.rels.rule(key.first, key.second);
    Poly got = wr ? substitute_b_zero(*wr) : Poly(1);
    if (!(normal_form(got, P.rels) == rhs)) {
      if (detail)
        *detail = "relation " + pair_str(key.first, key.second) + " differs";
      return false;
    }
  }
  for (const auto& [key, rhs] : W.rels.rules()) {
    if (P.rels.rule(key.first, key.second)) continue;  // compared above
    if (!P.rels.is_admitted(key.first) || !P.rels.is_admitted(key.second))
      continue;  // b-sector rules disappear at b = 0
    if (!substitute_b_zero(rhs).is_zero()) {
      if (detail)
        *detail = "extra relation " + pair_str(key.first, key.second);
      return false;
    }
  }
  for (const auto& g : P.gens) {
    if (!(normal_form(substitute_b_zero(W.coproduct.at(g)), P.rels) ==
          normal_form(P.coproduct.at(g), P.rels))) {
      if (detail) *detail = "coproduct of " + g.str() + " differs";
      return false;
    }
    if (!(normal_form(substitute_b_zero(W.antipode.at(g)), P.rels) ==
          normal_form(P.antipode.at(g), P.rels))) {
      if (detail) *detail = "antipode of " + g.str() + " differs";
      return false;
    }
    if (!(W.counit.at(g) == P.counit.at(g))) {
      if (detail) *detail = "counit of " + g.str() + " differs";
      return false;
    }
  }
  return true;
}

}  // namespace kappa
