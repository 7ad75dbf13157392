#pragma once

#include "kappa/relations.hpp"

namespace kappa {

// Generator images of an algebra map into a tensor power of the target.
struct GenMap {
  int out_arity = 1;
  std::map<Gen, Poly> img;  // every image has arity out_arity

  static GenMap identity(int order);  // lazily extended: g -> g
  bool is_identity = false;
  int identity_order = 0;

  const Poly image(const Gen& g) const;
};

// Multiplicative/linear extension of per-slot generator maps; slot j of x is
// mapped through maps[j], outputs are laid side by side and normal-formed in
// the target relation set. Throws ConfigError on a missing generator image.
Poly apply_hom(const Poly& x, const std::vector<GenMap>& maps,
               const RelationSet& target, int order);

// Single map applied to an arity-1 element.
Poly apply_hom(const Poly& x, const GenMap& map, const RelationSet& target,
               int order);

// Anti-multiplicative extension (letters reversed), for antipodes.
Poly apply_antihom(const Poly& x, const std::map<Gen, Poly>& img,
                   const RelationSet& target, int order);

// Applies a counit to one slot: words in that slot collapse to the product of
// their letters' counit values; the slot is removed.
Poly apply_counit(const Poly& x, int slot, const std::map<Gen, Scalar>& eps);

// Counit of a single word (product of letter values).
Scalar counit_word(const Word& w, const std::map<Gen, Scalar>& eps);

}  // namespace kappa
