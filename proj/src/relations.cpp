#include "kappa/relations.hpp"

#include <algorithm>
#include <utility>

namespace kappa {

void RelationSet::add_rule(const Gen& hi, const Gen& lo,
                           const Poly& bracket_rhs) {
  if (!(lo < hi)) throw ConfigError("rule pair not strictly ordered");
  admit(hi);
  admit(lo);
  if (!bracket_rhs.is_zero()) rules_[{hi, lo}] = bracket_rhs;
}

void RelationSet::replace_rule(const Gen& hi, const Gen& lo,
                               const Poly& bracket_rhs) {
  rules_.erase({hi, lo});
  add_rule(hi, lo, bracket_rhs);
}

void RelationSet::add_contraction(const Gen& x, const Gen& y) {
  admit(x);
  admit(y);
  contractions_.insert({x, y});
  contractions_.insert({y, x});
}

const Poly* RelationSet::rule(const Gen& hi, const Gen& lo) const {
  auto it = rules_.find({hi, lo});
  return it == rules_.end() ? nullptr : &it->second;
}

bool RelationSet::is_contraction(const Gen& x, const Gen& y) const {
  return contractions_.count({x, y}) > 0;
}

bool RelationSet::commute_freely(const Gen& x, const Gen& y) const {
  if (is_contraction(x, y)) return false;
  const Gen& hi = (x < y) ? y : x;
  const Gen& lo = (x < y) ? x : y;
  if (hi == lo) return true;
  return rule(hi, lo) == nullptr;
}

namespace {

// Position of the first (or last) rewritable adjacent pair, or nullopt.
struct Redex {
  int slot;
  int pos;
  bool contraction;
};

bool find_redex(const TWord& w, const RelationSet& R, Strategy strategy,
                Redex& out) {
  const int ns = w.arity();
  auto scan_slot = [&](int s, bool& found) {
    const Word& word = w.slots[s];
    const int m = static_cast<int>(word.size());
    if (strategy == Strategy::Leftmost) {
      for (int p = 0; p + 1 < m; ++p) {
        if (R.is_contraction(word[p], word[p + 1])) {
          out = {s, p, true};
          found = true;
          return;
        }
        if (word[p + 1] < word[p]) {
          out = {s, p, false};
          found = true;
          return;
        }
      }
    } else {
      for (int p = m - 2; p >= 0; --p) {
        if (R.is_contraction(word[p], word[p + 1])) {
          out = {s, p, true};
          found = true;
          return;
        }
        if (word[p + 1] < word[p]) {
          out = {s, p, false};
          found = true;
          return;
        }
      }
    }
  };
  bool found = false;
  if (strategy == Strategy::Leftmost) {
    for (int s = 0; s < ns && !found; ++s) scan_slot(s, found);
  } else {
    for (int s = ns - 1; s >= 0 && !found; --s) scan_slot(s, found);
  }
  return found;
}

}  // namespace

Poly normal_form(const Poly& x, const RelationSet& R, Strategy strategy) {
  for (const auto& [w, c] : x.terms())
    for (const auto& slot : w.slots)
      for (const auto& g : slot)
        if (!R.is_admitted(g))
          throw ConfigError("generator not covered by relation set: " +
                            g.str());

  Poly result(x.arity());
  std::vector<std::pair<TWord, Series>> work(x.terms().begin(),
                                             x.terms().end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;

    Redex rx;
    if (!find_redex(w, R, strategy, rx)) {
      result.add_term(w, c);
      continue;
    }

    Word& word = w.slots[rx.slot];
    if (rx.contraction) {
      TWord w2 = w;
      w2.slots[rx.slot].erase(w2.slots[rx.slot].begin() + rx.pos,
                              w2.slots[rx.slot].begin() + rx.pos + 2);
      work.emplace_back(std::move(w2), c);
      continue;
    }

    const Gen hi = word[rx.pos];
    const Gen lo = word[rx.pos + 1];

    TWord swapped = w;
    std::swap(swapped.slots[rx.slot][rx.pos],
              swapped.slots[rx.slot][rx.pos + 1]);
    work.emplace_back(std::move(swapped), c);

    if (const Poly* rhs = R.rule(hi, lo)) {
      Word prefix(word.begin(), word.begin() + rx.pos);
      Word suffix(word.begin() + rx.pos + 2, word.end());
      for (const auto& [u, d] : rhs->terms()) {
        TWord inserted = w;
        Word& tw = inserted.slots[rx.slot];
        tw = prefix;
        tw.insert(tw.end(), u.slots[0].begin(), u.slots[0].end());
        tw.insert(tw.end(), suffix.begin(), suffix.end());
        work.emplace_back(std::move(inserted), c * d);
      }
    }
  }
  return result;
}

Poly commutator(const Poly& x, const Poly& y, const RelationSet& R) {
  return normal_form(x * y - y * x, R);
}

Poly exp_series(const Poly& x, const RelationSet& R, int order) {
  std::vector<Gen> letters;
  for (const auto& [w, c] : x.terms()) {
    if (c.low_degree() == 0)
      throw ConfigError("exp_series: term with lam-degree-0 coefficient");
    for (const auto& slot : w.slots)
      for (const auto& g : slot) letters.push_back(g);
  }
  for (size_t i = 0; i < letters.size(); ++i)
    for (size_t j = i + 1; j < letters.size(); ++j)
      if (!(letters[i] == letters[j]) &&
          !R.commute_freely(letters[i], letters[j]))
        throw ConfigError("exp_series: generators do not mutually commute");

  Poly acc = Poly::unit(order, x.arity());
  Poly pw = Poly::unit(order, x.arity());
  Rational factorial(1);
  for (int m = 1; m <= order; ++m) {
    pw = normal_form(pw * x, R);
    if (pw.is_zero()) break;
    factorial *= m;
    acc += pw.scaled(Scalar(Rational(1) / factorial));
  }
  return acc;
}

Poly star(const Poly& x) {
  Poly r(x.arity());
  for (const auto& [w, c] : x.terms()) {
    TWord rw = w;
    for (auto& slot : rw.slots) std::reverse(slot.begin(), slot.end());
    r.add_term(rw, c.conj());
  }
  return r;
}

}  // namespace kappa
