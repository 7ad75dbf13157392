#include "kappa/ortho.hpp"

#include <algorithm>
#include <queue>

namespace kappa {

namespace {

// Commutative polynomials in the Lam entries: sorted words with Scalar
// coefficients under graded reverse lexicographic order.
using CPoly = std::map<Word, Scalar>;

// degrevlex: compare degree, then the reversed exponent comparison — the
// word owning the smaller amount of the largest distinguishing variable wins.
bool mono_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // walk from the largest letters down
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  while (ia != a.rend() && ib != b.rend()) {
    if (*ia == *ib) {
      ++ia;
      ++ib;
      continue;
    }
    // the word whose current letter is larger has more of the top variable:
    // in degrevlex it is the SMALLER monomial... reversed: it is LARGER in
    // plain deglex. Use deglex-from-the-top (graded lex with large letters
    // weighing most), a valid monomial order.
    return *ia < *ib;
  }
  return false;
}

Word mono_mul(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool mono_divides(const Word& lead, const Word& w, Word* quot) {
  if (quot) quot->clear();
  size_t i = 0;
  for (const Gen& g : w) {
    if (i < lead.size() && lead[i] == g)
      ++i;
    else if (quot)
      quot->push_back(g);
  }
  return i == lead.size();
}

void cpoly_add(CPoly* p, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = p->find(w);
  if (it == p->end()) {
    p->emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p->erase(it);
  }
}

CPoly::const_iterator graded_max(const CPoly& p) {
  auto best = p.begin();
  for (auto it = std::next(p.begin()); it != p.end(); ++it)
    if (mono_less(best->first, it->first)) best = it;
  return best;
}

struct BasisElem {
  CPoly poly;
  Word lead;
  Scalar lc;
};

BasisElem make_elem(CPoly p) {
  auto mx = graded_max(p);
  BasisElem e{std::move(p), mx->first, mx->second};
  return e;
}

CPoly cpoly_reduce(CPoly p, const std::vector<BasisElem>& basis) {
  CPoly rem;
  while (!p.empty()) {
    auto mx = graded_max(p);
    Word w = mx->first;
    Scalar c = mx->second;
    bool hit = false;
    for (const auto& q : basis) {
      Word quot;
      if (q.lead.size() > w.size() || !mono_divides(q.lead, w, &quot))
        continue;
      Scalar f = c / q.lc;
      for (const auto& [qw, qc] : q.poly)
        cpoly_add(&p, mono_mul(qw, quot), -(f * qc));
      hit = true;
      break;
    }
    if (!hit) {
      cpoly_add(&rem, w, c);
      p.erase(w);
    }
  }
  return rem;
}

Word mono_lcm(const Word& a, const Word& b) {
  // multiset union
  Word r;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && *ia < *ib)) {
      r.push_back(*ia++);
    } else if (ia == a.end() || *ib < *ia) {
      r.push_back(*ib++);
    } else {
      r.push_back(*ia);
      ++ia;
      ++ib;
    }
  }
  return r;
}

bool mono_coprime(const Word& a, const Word& b) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return false;
    if (*ia < *ib)
      ++ia;
    else
      ++ib;
  }
  return true;
}

std::vector<BasisElem> buchberger(std::vector<CPoly> gens) {
  std::vector<BasisElem> basis;
  for (auto& g : gens)
    if (!g.empty()) basis.push_back(make_elem(std::move(g)));

  struct Pair {
    size_t i, j;
    Word lcm;
  };
  auto cmp = [](const Pair& a, const Pair& b) {
    return mono_less(b.lcm, a.lcm);  // smaller lcm first
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(cmp)> queue(cmp);
  auto push_pairs = [&](size_t k) {
    for (size_t i = 0; i < k; ++i) {
      if (mono_coprime(basis[i].lead, basis[k].lead)) continue;
      queue.push({i, k, mono_lcm(basis[i].lead, basis[k].lead)});
    }
  };
  for (size_t k = 1; k < basis.size(); ++k) push_pairs(k);

  while (!queue.empty()) {
    Pair pr = queue.top();
    queue.pop();
    // chain criterion: skip if some other lead divides the lcm strictly
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (basis[k].lead.size() < pr.lcm.size() &&
          mono_divides(basis[k].lead, pr.lcm, nullptr) &&
          !(mono_lcm(basis[k].lead, basis[pr.i].lead) == pr.lcm) &&
          !(mono_lcm(basis[k].lead, basis[pr.j].lead) == pr.lcm))
        skip = true;
    }
    if (skip) continue;

    Word qi, qj;
    mono_divides(basis[pr.i].lead, pr.lcm, &qi);
    mono_divides(basis[pr.j].lead, pr.lcm, &qj);
    CPoly s;
    for (const auto& [w, c] : basis[pr.i].poly)
      cpoly_add(&s, mono_mul(w, qi), c / basis[pr.i].lc);
    for (const auto& [w, c] : basis[pr.j].poly)
      cpoly_add(&s, mono_mul(w, qj), -(c / basis[pr.j].lc));
    CPoly rem = cpoly_reduce(std::move(s), basis);
    if (rem.empty()) continue;
    basis.push_back(make_elem(std::move(rem)));
    push_pairs(basis.size() - 1);
  }

  // minimalize: drop elements with lead divisible by another kept lead
  std::vector<bool> keep(basis.size(), true);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (mono_divides(basis[j].lead, basis[i].lead, nullptr) &&
          (basis[j].lead != basis[i].lead || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<BasisElem> kept;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) kept.push_back(std::move(basis[i]));

  // tail-reduce each kept element against the others
  std::vector<BasisElem> out;
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<BasisElem> others;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    CPoly tail = kept[i].poly;
    tail.erase(kept[i].lead);
    CPoly head{{kept[i].lead, Scalar(1)}};
    CPoly red = cpoly_reduce(std::move(tail), others);
    for (const auto& [w, c] : red) cpoly_add(&head, w, c / kept[i].lc);
    out.push_back(make_elem(std::move(head)));
  }
  return out;
}

}  // namespace

OrthoReducer::OrthoReducer(const Metric& g, OrthoMode mode) {
  const int n = g.dim();
  std::vector<CPoly> gens;

  // Lam^ga_be g_{ga al} Lam^al_nu - g_{be nu}, be <= nu
  for (int be = 0; be < n; ++be)
    for (int nu = be; nu < n; ++nu) {
      CPoly q;
      for (int ga = 0; ga < n; ++ga)
        for (int al = 0; al < n; ++al) {
          if (g.g(ga, al) == 0) continue;
          Word w = mono_mul({Gen::lorentz(ga, be)}, {Gen::lorentz(al, nu)});
          cpoly_add(&q, w, Scalar(g.g(ga, al)));
        }
      cpoly_add(&q, {}, Scalar(-g.g(be, nu)));
      if (!q.empty()) gens.push_back(std::move(q));
    }

  // Lam^mu_al g^{al be} Lam^nu_be - g^{mu nu}, mu <= nu
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu; nu < n; ++nu) {
      CPoly q;
      for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be) {
          if (g.ginv(al, be) == 0) continue;
          Word w = mono_mul({Gen::lorentz(mu, al)}, {Gen::lorentz(nu, be)});
          cpoly_add(&q, w, Scalar(g.ginv(al, be)));
        }
      cpoly_add(&q, {}, Scalar(-g.ginv(mu, nu)));
      if (!q.empty()) gens.push_back(std::move(q));
    }

  std::vector<BasisElem> basis;
  if (mode == OrthoMode::Complete) {
    basis = buchberger(std::move(gens));
  } else {
    for (auto& q : gens)
      if (!q.empty()) basis.push_back(make_elem(std::move(q)));
  }
  for (auto& b : basis) {
    Rule r;
    r.lead = b.lead;
    r.lc = b.lc;
    for (const auto& [w, c] : b.poly)
      if (w != r.lead) r.tail.push_back({w, c});
    rules_.push_back(std::move(r));
  }
}

Poly OrthoReducer::reduce(const Poly& x, const RelationSet& ring) const {
  Poly cur = normal_form(x, ring);
  for (;;) {
    const Rule* hit = nullptr;
    TWord hw;
    Series hc;
    Word quot;
    int slot = -1;
    for (const auto& [w, c] : cur.terms()) {
      for (int s = 0; s < cur.arity() && !hit; ++s) {
        for (const auto& rule : rules_) {
          if (mono_divides(rule.lead, w.slots[s], &quot)) {
            hit = &rule;
            hw = w;
            hc = c;
            slot = s;
            break;
          }
        }
      }
      if (hit) break;
    }
    if (!hit) return cur;
    // lc*lead + tail = 0 on the group: c*(lead*quot) = -(c/lc)*tail*quot
    Series factor = hc * hit->lc.inverse();
    cur.add_term(hw, -hc);
    Poly repl(cur.arity());
    for (const auto& [tw, tc] : hit->tail) {
      TWord nw = hw;
      nw.slots[slot] = mono_mul(tw, quot);
      repl.add_term(nw, Series(tc, hc.order()));
    }
    cur -= normal_form(repl, ring).scaled(factor);
  }
}

bool OrthoReducer::reduces_to_zero(const Poly& x,
                                   const RelationSet& ring) const {
  return reduce(x, ring).is_zero();
}

}  // namespace kappa
