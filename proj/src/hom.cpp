#include "kappa/hom.hpp"

#include <algorithm>

namespace kappa {

GenMap GenMap::identity(int order) {
  GenMap m;
  m.is_identity = true;
  m.identity_order = order;
  return m;
}

const Poly GenMap::image(const Gen& g) const {
  if (is_identity) return Poly::gen(g, identity_order);
  auto it = img.find(g);
  if (it == img.end())
    throw ConfigError("missing generator image for " + g.str());
  return it->second;
}

Poly apply_hom(const Poly& x, const std::vector<GenMap>& maps,
               const RelationSet& target, int order) {
  if (static_cast<int>(maps.size()) != x.arity())
    throw ConfigError("per-slot map count does not match arity");
  int total = 0;
  for (const auto& m : maps) total += m.is_identity ? 1 : m.out_arity;

  Poly out(total);
  for (const auto& [w, c] : x.terms()) {
    Poly acc = Poly::unit(c.order(), total);
    int offset = 0;
    for (int s = 0; s < x.arity(); ++s) {
      const int slot_arity = maps[s].is_identity ? 1 : maps[s].out_arity;
      for (const auto& g : w.slots[s]) {
        acc = acc * maps[s].image(g).embedded(offset, total);
      }
      offset += slot_arity;
    }
    out += acc.scaled(c);
  }
  return normal_form(out, target);
}

Poly apply_hom(const Poly& x, const GenMap& map, const RelationSet& target,
               int order) {
  return apply_hom(x, std::vector<GenMap>{map}, target, order);
}

Poly apply_antihom(const Poly& x, const std::map<Gen, Poly>& img,
                   const RelationSet& target, int order) {
  if (x.arity() != 1) throw ConfigError("apply_antihom expects arity 1");
  Poly out(1);
  for (const auto& [w, c] : x.terms()) {
    Poly acc = Poly::unit(c.order() >= 0 ? c.order() : order);
    for (auto it = w.slots[0].rbegin(); it != w.slots[0].rend(); ++it) {
      auto im = img.find(*it);
      if (im == img.end())
        throw ConfigError("missing antipode image for " + it->str());
      acc = acc * im->second;
    }
    out += acc.scaled(c);
  }
  return normal_form(out, target);
}

Scalar counit_word(const Word& w, const std::map<Gen, Scalar>& eps) {
  Scalar v(1);
  for (const auto& g : w) {
    auto it = eps.find(g);
    if (it == eps.end()) throw ConfigError("missing counit value for " + g.str());
    v *= it->second;
    if (v.is_zero()) break;
  }
  return v;
}

Poly apply_counit(const Poly& x, int slot, const std::map<Gen, Scalar>& eps) {
  Poly out(x.arity() - 1);
  for (const auto& [w, c] : x.terms()) {
    Scalar v = counit_word(w.slots[slot], eps);
    if (v.is_zero()) continue;
    TWord t;
    for (int s = 0; s < x.arity(); ++s)
      if (s != slot) t.slots.push_back(w.slots[s]);
    out.add_term(t, c * v);
  }
  return out;
}

}  // namespace kappa
