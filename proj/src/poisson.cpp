#include "kappa/poisson.hpp"

namespace kappa {

std::string FieldLabel::str() const {
  switch (kind) {
    case Kind::Rotation:
      return "X^{" + std::to_string(a) + "," + std::to_string(b) + "}";
    case Kind::Translation:
      return "X^" + std::to_string(a);
    case Kind::Dilatation:
      return "X_dil";
  }
  return "?";
}

Poly Derivation::apply(const Poly& f, const RelationSet& ring) const {
  Poly out(1);
  for (const auto& [w, c] : f.terms()) {
    const Word& word = w.slots[0];
    for (size_t p = 0; p < word.size(); ++p) {
      auto it = img.find(word[p]);
      if (it == img.end())
        throw ConfigError("derivation has no image for " + word[p].str());
      if (it->second.is_zero()) continue;
      Poly prefix = Poly::word(Word(word.begin(), word.begin() + p), c.order());
      Poly suffix =
          Poly::word(Word(word.begin() + p + 1, word.end()), c.order());
      out += (prefix * it->second * suffix).scaled(c);
    }
  }
  return normal_form(out, ring);
}

namespace {

RelationSet coordinate_ring(GroupKind kind, int n) {
  RelationSet R;
  for (int mu = 0; mu < n; ++mu) {
    R.admit(Gen::coord(mu));
    for (int nu = 0; nu < n; ++nu) R.admit(Gen::lorentz(mu, nu));
  }
  if (kind == GroupKind::Weyl) {
    R.admit(Gen::bcoord());
    R.add_contraction(Gen::exp_b(+1), Gen::exp_b(-1));
  }
  return R;
}

// Lam^{m, al} = sum_rho g^{rho al} Lam^m_rho
Poly lorentz_raised_second(const Metric& g, int m, int al, int order) {
  Poly p(1);
  for (int rho = 0; rho < g.dim(); ++rho) {
    const Rational& c = g.ginv(rho, al);
    if (c == 0) continue;
    p.add_term(single_word({Gen::lorentz(m, rho)}), Series(Scalar(c), order));
  }
  return p;
}

}  // namespace

void invariant_fields(GroupKind kind, const Metric& g, int order,
                      std::vector<FieldLabel>* labels,
                      std::vector<Derivation>* XL,
                      std::vector<Derivation>* XR) {
  const int n = g.dim();
  labels->clear();
  XL->clear();
  XR->clear();

  std::vector<Gen> coords;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) coords.push_back(Gen::lorentz(mu, nu));
  for (int mu = 0; mu < n; ++mu) coords.push_back(Gen::coord(mu));
  if (kind == GroupKind::Weyl) {
    coords.push_back(Gen::bcoord());
    coords.push_back(Gen::exp_b(+1));
    coords.push_back(Gen::exp_b(-1));
  }
  auto blank = [&]() {
    Derivation d;
    for (const auto& c : coords) d.img[c] = Poly(1);
    return d;
  };

  // rotation directions X^{al be}, al < be
  for (int al = 0; al < n; ++al)
    for (int be = al + 1; be < n; ++be) {
      labels->push_back({FieldLabel::Kind::Rotation, al, be});
      Derivation l = blank(), r = blank();
      for (int m = 0; m < n; ++m) {
        for (int nu = 0; nu < n; ++nu) {
          // X_L: Lam^{m al} d/dLam^m_be - Lam^{m be} d/dLam^m_al
          Poly li(1);
          if (nu == be) li += lorentz_raised_second(g, m, al, order);
          if (nu == al) li -= lorentz_raised_second(g, m, be, order);
          l.img[Gen::lorentz(m, nu)] = li;
          // X_R: Lam^m_n -> g^{al m} Lam^be_n - g^{be m} Lam^al_n
          Poly ri(1);
          if (g.ginv(al, m) != 0)
            ri.add_term(single_word({Gen::lorentz(be, nu)}),
                        Series(Scalar(g.ginv(al, m)), order));
          if (g.ginv(be, m) != 0)
            ri.add_term(single_word({Gen::lorentz(al, nu)}),
                        Series(Scalar(-g.ginv(be, m)), order));
          r.img[Gen::lorentz(m, nu)] = ri;
        }
        // X_R: a^m -> a^be g^{al m} - a^al g^{be m}
        Poly ra(1);
        if (g.ginv(al, m) != 0)
          ra.add_term(single_word({Gen::coord(be)}),
                      Series(Scalar(g.ginv(al, m)), order));
        if (g.ginv(be, m) != 0)
          ra.add_term(single_word({Gen::coord(al)}),
                      Series(Scalar(-g.ginv(be, m)), order));
        r.img[Gen::coord(m)] = ra;
      }
      XL->push_back(std::move(l));
      XR->push_back(std::move(r));
    }

  // translation directions X^al
  for (int al = 0; al < n; ++al) {
    labels->push_back({FieldLabel::Kind::Translation, al, 0});
    Derivation l = blank(), r = blank();
    for (int m = 0; m < n; ++m) {
      // X_L: (e^b) Lam^{m al} d/da^m
      Poly li = lorentz_raised_second(g, m, al, order);
      if (kind == GroupKind::Weyl) li = Poly::gen(Gen::exp_b(+1), order) * li;
      l.img[Gen::coord(m)] = li;
      // X_R: a^m -> g^{al m}
      Poly ri(1);
      if (g.ginv(al, m) != 0)
        ri.add_term(unit_word(1), Series(Scalar(g.ginv(al, m)), order));
      r.img[Gen::coord(m)] = ri;
    }
    XL->push_back(std::move(l));
    XR->push_back(std::move(r));
  }

  if (kind == GroupKind::Weyl) {
    labels->push_back({FieldLabel::Kind::Dilatation, 0, 0});
    Derivation l = blank(), r = blank();
    // X_L = e^b d/de^b
    l.img[Gen::exp_b(+1)] = Poly::gen(Gen::exp_b(+1), order);
    l.img[Gen::exp_b(-1)] = -Poly::gen(Gen::exp_b(-1), order);
    l.img[Gen::bcoord()] = Poly::unit(order);
    // X_R = a^mu d/da^mu + e^b d/de^b
    for (int mu = 0; mu < n; ++mu)
      r.img[Gen::coord(mu)] = Poly::gen(Gen::coord(mu), order);
    r.img[Gen::exp_b(+1)] = Poly::gen(Gen::exp_b(+1), order);
    r.img[Gen::exp_b(-1)] = -Poly::gen(Gen::exp_b(-1), order);
    r.img[Gen::bcoord()] = Poly::unit(order);
    XL->push_back(std::move(l));
    XR->push_back(std::move(r));
  }
}

PoissonStructure build_poisson(GroupKind kind, const Metric& g, int order) {
  PoissonStructure P{kind,
                     g,
                     order,
                     coordinate_ring(kind, g.dim()),
                     {},
                     {},
                     {},
                     {},
                     {},
                     OrthoReducer(g)};
  const int n = g.dim();
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) P.coordinates.push_back(Gen::lorentz(mu, nu));
  for (int mu = 0; mu < n; ++mu) P.coordinates.push_back(Gen::coord(mu));
  if (kind == GroupKind::Weyl) {
    P.coordinates.push_back(Gen::bcoord());
    P.coordinates.push_back(Gen::exp_b(+1));
    P.coordinates.push_back(Gen::exp_b(-1));
  }

  invariant_fields(kind, g, order, &P.labels, &P.XL, &P.XR);

  // r in the field basis: substituting M = iX into the defining wedge gives
  // r = -(1/kappa) sum_{al<be, nu} (g_{0al} g_{nu be} - g_{0be} g_{nu al})
  //     X^{al be} ^ X^nu  (real coefficients; lam is applied by the bracket)
  auto label_index = [&](FieldLabel::Kind k, int a, int b) {
    for (size_t i = 0; i < P.labels.size(); ++i)
      if (P.labels[i].kind == k && P.labels[i].a == a && P.labels[i].b == b)
        return static_cast<int>(i);
    throw ConfigError("missing field label");
  };
  for (int al = 0; al < n; ++al)
    for (int be = al + 1; be < n; ++be)
      for (int nu = 0; nu < n; ++nu) {
        Rational c = -(g.g(0, al) * g.g(nu, be) - g.g(0, be) * g.g(nu, al));
        if (c == 0) continue;
        int A = label_index(FieldLabel::Kind::Rotation, al, be);
        int B = label_index(FieldLabel::Kind::Translation, nu, 0);
        P.rtilde[{A, B}] += c;
        P.rtilde[{B, A}] -= c;
      }
  for (auto it = P.rtilde.begin(); it != P.rtilde.end();)
    it = (it->second == 0) ? P.rtilde.erase(it) : std::next(it);
  return P;
}

Poly sklyanin_bracket(const PoissonStructure& P, const Poly& f, const Poly& h) {
  std::map<int, Poly> rf, rh, lf, lh;
  auto get = [&](std::map<int, Poly>& cache, const std::vector<Derivation>& X,
                 int i, const Poly& arg) -> const Poly& {
    auto it = cache.find(i);
    if (it == cache.end())
      it = cache.emplace(i, X[i].apply(arg, P.ring)).first;
    return it->second;
  };
  Poly acc(1);
  for (const auto& [key, c] : P.rtilde) {
    const auto& [A, B] = key;
    Poly t = get(rf, P.XR, A, f) * get(rh, P.XR, B, h) -
             get(lf, P.XL, A, f) * get(lh, P.XL, B, h);
    acc += t.scaled(Scalar(c));
  }
  acc = acc.scaled(
      Series::lambda_pow(1, Scalar(kSklyaninNormalization), P.order));
  return normal_form(acc, P.ring);
}

Poly expected_coordinate_bracket(const PoissonStructure& P, const Gen& x,
                                 const Gen& y) {
  const Metric& g = P.g;
  const int N = P.order;
  if (y < x) return -expected_coordinate_bracket(P, y, x);

  if (x.sort == Sort::LorentzEntry && y.sort == Sort::TransCoord) {
    // {Lam^al_be, a^rho} =
    //   -1/kappa ((e^b Lam^al_0 - d^al_0) Lam^rho_be
    //             + (Lam_{0 be} - e^b g_{0 be}) g^{al rho})
    // with e^b -> 1 for the Poincare group.
    const int al = x.a, be = x.b, rho = y.a;
    const bool weyl = P.kind == GroupKind::Weyl;
    Poly acc(1);
    Word w1 = {Gen::lorentz(al, 0), Gen::lorentz(rho, be)};
    if (weyl) w1.push_back(Gen::exp_b(+1));
    acc.add_term(single_word(w1), Series::one(N));
    if (al == 0)
      acc.add_term(single_word({Gen::lorentz(rho, be)}),
                   Series(Scalar(-1), N));
    for (int mu = 0; mu < g.dim(); ++mu) {
      Rational c = g.g(0, mu) * g.ginv(al, rho);
      if (c != 0)
        acc.add_term(single_word({Gen::lorentz(mu, be)}), Series(Scalar(c), N));
    }
    Rational c2 = g.g(0, be) * g.ginv(al, rho);
    if (c2 != 0) {
      Word w2 = weyl ? Word{Gen::exp_b(+1)} : Word{};
      acc.add_term(single_word(w2), Series(Scalar(-c2), N));
    }
    return normal_form(
        acc.scaled(Series::lambda_pow(1, Scalar(-1), N)), P.ring);
  }

  if (x.sort == Sort::TransCoord && y.sort == Sort::TransCoord) {
    // {a^rho, a^sig} = 1/kappa (d^rho_0 a^sig - d^sig_0 a^rho)
    const int rho = x.a, sig = y.a;
    Poly acc(1);
    if (rho == 0)
      acc.add_term(single_word({Gen::coord(sig)}), Series::one(N));
    if (sig == 0)
      acc.add_term(single_word({Gen::coord(rho)}), Series(Scalar(-1), N));
    return acc.scaled(Series::lambda_pow(1, Scalar(1), N));
  }

  // Lam-Lam and the whole b sector Poisson-commute.
  return Poly(1);
}

CoordinateBracketTable::CoordinateBracketTable(const PoissonStructure& P)
    : P_(P) {
  const size_t m = P.labels.size();
  const size_t k = P.coordinates.size();
  xl_.resize(m);
  xr_.resize(m);
  for (size_t a = 0; a < m; ++a) {
    xl_[a].reserve(k);
    xr_[a].reserve(k);
    for (size_t i = 0; i < k; ++i) {
      Poly c = Poly::gen(P.coordinates[i], P.order);
      xl_[a].push_back(P.XL[a].apply(c, P.ring));
      xr_[a].push_back(P.XR[a].apply(c, P.ring));
    }
  }
}

Poly CoordinateBracketTable::bracket(int i, int j) const {
  Poly acc(1);
  for (const auto& [key, c] : P_.rtilde) {
    const auto& [A, B] = key;
    Poly t = xr_[A][i] * xr_[B][j] - xl_[A][i] * xl_[B][j];
    acc += t.scaled(Scalar(c));
  }
  acc = acc.scaled(
      Series::lambda_pow(1, Scalar(kSklyaninNormalization), P_.order));
  return normal_form(acc, P_.ring);
}

std::vector<BracketMismatch> verify_coordinate_brackets(
    const PoissonStructure& P) {
  std::vector<BracketMismatch> bad;
  CoordinateBracketTable table(P);
  const auto& cs = P.coordinates;
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i; j < cs.size(); ++j) {
      Poly got = table.bracket(static_cast<int>(i), static_cast<int>(j));
      Poly want = expected_coordinate_bracket(P, cs[i], cs[j]);
      if (!P.ortho.reduces_to_zero(got - want, P.ring))
        bad.push_back({cs[i], cs[j], got.str(), want.str()});
    }
  return bad;
}

Poly poisson_jacobi(const PoissonStructure& P, const Poly& f, const Poly& h,
                    const Poly& k) {
  Poly out = sklyanin_bracket(P, f, sklyanin_bracket(P, h, k));
  out += sklyanin_bracket(P, h, sklyanin_bracket(P, k, f));
  out += sklyanin_bracket(P, k, sklyanin_bracket(P, f, h));
  return out;
}

Poly weyl_jacobi_closed_form(const PoissonStructure& P, int al, int be,
                             int rho, int sig) {
  const Metric& g = P.g;
  const int N = P.order;
  Poly factor(1);  // e^{2b} - 1
  factor.add_term(single_word({Gen::exp_b(+1), Gen::exp_b(+1)}),
                  Series::one(N));
  factor.add_term(unit_word(1), Series(Scalar(-1), N));
  Poly lin(1);
  if (g.ginv(al, sig) != 0)
    lin.add_term(single_word({Gen::lorentz(rho, be)}),
                 Series(Scalar(g.ginv(al, sig)), N));
  if (g.ginv(al, rho) != 0)
    lin.add_term(single_word({Gen::lorentz(sig, be)}),
                 Series(Scalar(-g.ginv(al, rho)), N));
  Poly out = (factor * lin).scaled(
      Series::lambda_pow(2, Scalar(g.g(0, 0)), N));
  return normal_form(out, P.ring);
}

namespace {

// X-basis element expressed over the classical Lie algebra basis
// (M = iX, P = X, D = iX).
std::vector<Scalar> field_to_lie(const PoissonStructure& P,
                                 const LieAlgebra& L, const FieldLabel& lab) {
  std::vector<Scalar> v(L.dim());
  const Metric& g = P.g;
  const int n = g.dim();
  const Scalar mi = -Scalar::i();
  switch (lab.kind) {
    case FieldLabel::Kind::Rotation:
      // X^{al be} = -i M^{al be} = -i (g^{al mu} g^{be nu}) M_{mu nu}
      for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu) {
          Rational c = g.ginv(lab.a, mu) * g.ginv(lab.b, nu) -
                       g.ginv(lab.a, nu) * g.ginv(lab.b, mu);
          if (c != 0)
            v[L.index_of(Gen::rotation(mu, nu))] = mi * Scalar(c);
        }
      break;
    case FieldLabel::Kind::Translation:
      for (int mu = 0; mu < n; ++mu)
        if (g.ginv(lab.a, mu) != 0)
          v[L.index_of(Gen::momentum(mu))] = Scalar(g.ginv(lab.a, mu));
      break;
    case FieldLabel::Kind::Dilatation:
      v[L.index_of(Gen::dilatation())] = mi;
      break;
  }
  return v;
}

// Inverse conversion: a Lie basis vector as a field-label combination.
std::vector<Scalar> lie_to_field(const PoissonStructure& P,
                                 const LieAlgebra& L,
                                 const std::vector<Scalar>& v) {
  std::vector<Scalar> out(P.labels.size());
  const Metric& g = P.g;
  const int n = g.dim();
  auto label_index = [&](FieldLabel::Kind k, int a, int b) {
    for (size_t i = 0; i < P.labels.size(); ++i)
      if (P.labels[i].kind == k && P.labels[i].a == a && P.labels[i].b == b)
        return static_cast<int>(i);
    return -1;
  };
  const Scalar I = Scalar::i();
  for (int c = 0; c < L.dim(); ++c) {
    if (v[c].is_zero()) continue;
    const Gen& gen = L.basis()[c];
    if (gen.sort == Sort::Rotation) {
      // M_{mu nu} = i (g_{mu al} g_{nu be} - g_{mu be} g_{nu al}) X^{al be}
      for (int al = 0; al < n; ++al)
        for (int be = al + 1; be < n; ++be) {
          Rational r = g.g(gen.a, al) * g.g(gen.b, be) -
                       g.g(gen.a, be) * g.g(gen.b, al);
          if (r != 0)
            out[label_index(FieldLabel::Kind::Rotation, al, be)] +=
                v[c] * I * Scalar(r);
        }
    } else if (gen.sort == Sort::Momentum) {
      for (int al = 0; al < n; ++al)
        if (g.g(gen.a, al) != 0)
          out[label_index(FieldLabel::Kind::Translation, al, 0)] +=
              v[c] * Scalar(g.g(gen.a, al));
    } else {
      out[label_index(FieldLabel::Kind::Dilatation, 0, 0)] += v[c] * I;
    }
  }
  return out;
}

Derivation commutator_of(const Derivation& x, const Derivation& y,
                         const PoissonStructure& P) {
  Derivation d;
  for (const auto& c : P.coordinates) {
    Poly img = x.apply(y.img.at(c), P.ring) - y.apply(x.img.at(c), P.ring);
    d.img[c] = normal_form(img, P.ring);
  }
  return d;
}

bool derivation_equal_on_coords(const Derivation& x, const Derivation& y,
                                const PoissonStructure& P) {
  for (const auto& c : P.coordinates) {
    Poly a = normal_form(x.img.at(c), P.ring);
    Poly b = normal_form(y.img.at(c), P.ring);
    if (!(a == b)) return false;
  }
  return true;
}

}  // namespace

bool field_closure_check(const PoissonStructure& P, std::string* detail) {
  LieAlgebra L = (P.kind == GroupKind::Weyl) ? build_weyl(P.g)
                                             : build_poincare(P.g);
  const int m = static_cast<int>(P.labels.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      auto va = field_to_lie(P, L, P.labels[a]);
      auto vb = field_to_lie(P, L, P.labels[b]);
      std::vector<Scalar> res(L.dim());
      for (int i = 0; i < L.dim(); ++i) {
        if (va[i].is_zero()) continue;
        for (int j = 0; j < L.dim(); ++j) {
          if (vb[j].is_zero()) continue;
          for (int c = 0; c < L.dim(); ++c)
            res[c] += va[i] * vb[j] * L.f(i, j, c);
        }
      }
      auto combo = lie_to_field(P, L, res);
      for (int fam = 0; fam < 2; ++fam) {
        const auto& X = fam == 0 ? P.XL : P.XR;
        const Scalar sign = fam == 0 ? Scalar(1) : Scalar(-1);
        Derivation expected;
        for (const auto& c : P.coordinates) expected.img[c] = Poly(1);
        for (int k = 0; k < m; ++k) {
          if (combo[k].is_zero()) continue;
          for (const auto& c : P.coordinates)
            expected.img[c] += X[k].img.at(c).scaled(combo[k] * sign);
        }
        Derivation got = commutator_of(X[a], X[b], P);
        if (!derivation_equal_on_coords(got, expected, P)) {
          if (detail)
            *detail = std::string(fam == 0 ? "left" : "right") +
                      " family closure fails on [" + P.labels[a].str() + ", " +
                      P.labels[b].str() + "]";
          return false;
        }
      }
    }
  return true;
}

bool lr_commute_check(const PoissonStructure& P, std::string* detail) {
  const int m = static_cast<int>(P.labels.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Derivation got = commutator_of(P.XL[a], P.XR[b], P);
      for (const auto& c : P.coordinates)
        if (!got.img.at(c).is_zero()) {
          if (detail)
            *detail = "[" + P.labels[a].str() + "_L, " + P.labels[b].str() +
                      "_R] acts on " + c.str();
          return false;
        }
    }
  return true;
}

}  // namespace kappa
