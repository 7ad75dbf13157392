#include "kappa/rmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace kappa {

namespace {

// Sorts an index tuple, returning the permutation sign; 0 on repeats.
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  return sign;
}

void permute_all(const std::vector<int>& base, const Series& coeff,
                 Poly* sink, const LieAlgebra& L) {
  std::vector<int> perm = base;
  std::sort(perm.begin(), perm.end());
  do {
    // sign of perm relative to sorted base
    std::vector<int> tmp = perm;
    int sign = sort_sign(tmp);
    TWord w;
    for (int id : perm) w.slots.push_back({L.basis()[id]});
    Series c = coeff;
    if (sign < 0) c *= Scalar(-1);
    sink->add_term(w, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

bool Wedge::is_zero() const {
  for (const auto& [k, c] : comps)
    if (!c.is_zero()) return false;
  return true;
}

void Wedge::add(std::vector<int> idx, const Series& c) {
  int sign = sort_sign(idx);
  if (sign == 0 || c.is_zero()) return;
  Series v = c;
  if (sign < 0) v *= Scalar(-1);
  auto it = comps.find(idx);
  if (it == comps.end())
    comps.emplace(std::move(idx), v);
  else {
    it->second += v;
    if (it->second.is_zero()) comps.erase(it);
  }
}

Poly Wedge::to_tensor(const LieAlgebra& L, int order) const {
  Poly p(rank);
  for (const auto& [idx, c] : comps) permute_all(idx, c, &p, L);
  (void)order;
  return p;
}

std::string Wedge::str(const LieAlgebra& L) const {
  if (comps.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : comps) {
    if (!out.empty()) out += "  +  ";
    out += "[" + c.str() + "] ";
    bool first = true;
    for (int id : idx) {
      if (!first) out += " ^ ";
      first = false;
      out += L.basis()[id].str();
    }
  }
  return out;
}

bool operator==(const Wedge& a, const Wedge& b) {
  if (a.rank != b.rank) return false;
  for (const auto& [k, c] : a.comps) {
    auto it = b.comps.find(k);
    if (it == b.comps.end()) {
      if (!c.is_zero()) return false;
    } else if (!(c == it->second)) {
      return false;
    }
  }
  for (const auto& [k, c] : b.comps)
    if (!a.comps.count(k) && !c.is_zero()) return false;
  return true;
}

Wedge build_r(const Metric& g, const LieAlgebra& L, int order) {
  Wedge r;
  r.rank = 2;
  const int n = g.dim();
  for (int nu = 1; nu < n; ++nu) {
    const int rot = L.index_of(Gen::rotation(0, nu));
    if (rot < 0) throw ConfigError("missing rotation basis label");
    for (int al = 0; al < n; ++al) {
      const int mom = L.index_of(Gen::momentum(al));
      // (i/kappa) g^{nu al} M_{0 nu} ^ P_al
      Series c = Series::lambda_pow(1, Scalar::i_times(g.ginv(nu, al)), order);
      r.add({rot, mom}, c);
    }
  }
  return r;
}

Wedge build_r_from_components(const Metric& g, const LieAlgebra& L,
                              int order) {
  Wedge r;
  r.rank = 2;
  const int n = g.dim();
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      for (int al = 0; al < n; ++al) {
        Rational comp(0);
        if (mu == 0) comp += g.ginv(nu, al);
        if (nu == 0) comp -= g.ginv(mu, al);
        if (comp == 0 || mu == nu) continue;
        // r^{mu nu, al} M_{mu nu} ^ P_al with r = (i/2kappa)(...)
        comp /= 2;
        int rot, sign = 1;
        if (mu < nu) {
          rot = L.index_of(Gen::rotation(mu, nu));
        } else {
          rot = L.index_of(Gen::rotation(nu, mu));
          sign = -1;
        }
        const int mom = L.index_of(Gen::momentum(al));
        Series c = Series::lambda_pow(
            1, Scalar::i_times(sign > 0 ? comp : -comp), order);
        r.add({rot, mom}, c);
      }
  return r;
}

Wedge schouten(const Wedge& r, const LieAlgebra& L, Strategy strategy) {
  if (r.rank != 2) throw ConfigError("schouten expects a rank-2 wedge");
  int order = 4;
  for (const auto& [k, c] : r.comps) order = std::max(order, c.order());
  RelationSet R = L.relations(order);

  Poly t2 = r.to_tensor(L, order);  // arity 2
  auto place = [&](int s1, int s2) {
    Poly p(3);
    for (const auto& [w, c] : t2.terms()) {
      TWord t = unit_word(3);
      t.slots[s1] = w.slots[0];
      t.slots[s2] = w.slots[1];
      p.add_term(t, c);
    }
    return p;
  };
  Poly r12 = place(0, 1), r13 = place(0, 2), r23 = place(1, 2);

  auto comm = [&](const Poly& a, const Poly& b) {
    return normal_form(a * b - b * a, R, strategy);
  };
  Poly s = comm(r12, r13);
  s += comm(r12, r23);
  s += comm(r13, r23);

  Wedge out;
  out.rank = 3;
  for (const auto& [w, c] : s.terms()) {
    std::vector<int> idx;
    for (const auto& slot : w.slots) {
      if (slot.size() != 1)
        throw std::logic_error(
            "schouten result contains a non-linear tensor slot");
      idx.push_back(L.index_of(slot[0]));
    }
    std::vector<int> sorted = idx;
    int sign = sort_sign(sorted);
    if (sign == 0)
      throw std::logic_error("schouten result has repeated slot index");
    // accumulate only via the canonical representative; full antisymmetry is
    // verified below by re-expansion
    if (idx == sorted) out.add(idx, c);
  }
  if (!(out.to_tensor(L, order) == s))
    throw std::logic_error("schouten result is not fully antisymmetric");
  return out;
}

Wedge schouten_closed_form(const Metric& g, const LieAlgebra& L, int order) {
  Wedge w;
  w.rank = 3;
  const int n = g.dim();
  const Rational half(1, 2);
  for (int al = 0; al < n; ++al)
    for (int be = 0; be < n; ++be) {
      if (al == be) continue;
      int rot, sign = 1;
      if (al < be) {
        rot = L.index_of(Gen::rotation(al, be));
      } else {
        rot = L.index_of(Gen::rotation(be, al));
        sign = -1;
      }
      for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
          Rational coef =
              half * g.g(0, 0) * g.ginv(al, mu) * g.ginv(be, nu);
          if (sign < 0) coef = -coef;
          if (coef == 0) continue;
          w.add({rot, L.index_of(Gen::momentum(mu)),
                 L.index_of(Gen::momentum(nu))},
                Series::lambda_pow(2, Scalar::i_times(coef), order));
        }
    }
  return w;
}

bool is_cybe(const Wedge& r, const LieAlgebra& L) {
  return schouten(r, L).is_zero();
}

bool ad_invariant(const Wedge& w, const LieAlgebra& L, const Gen& X) {
  const int xi = L.index_of(X);
  if (xi < 0) throw ConfigError("ad_invariant: unknown basis label");
  int order = 2;
  for (const auto& [k, c] : w.comps) order = std::max(order, c.order());
  Poly full = w.to_tensor(L, order);
  Poly acted(w.rank);
  for (const auto& [tw, c] : full.terms()) {
    for (int s = 0; s < w.rank; ++s) {
      const int a = L.index_of(tw.slots[s][0]);
      for (int cdx = 0; cdx < L.dim(); ++cdx) {
        const Scalar& fc = L.f(xi, a, cdx);
        if (fc.is_zero()) continue;
        TWord nw = tw;
        nw.slots[s] = {L.basis()[cdx]};
        acted.add_term(nw, c * fc);
      }
    }
  }
  return acted.is_zero();
}

}  // namespace kappa
