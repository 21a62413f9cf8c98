#include "bracoid/bounds.hpp"

#include <algorithm>

namespace bracoid {

Bounds& mutable_bounds() {
  static Bounds b;
  return b;
}

void raise_bounds(std::size_t order) {
  Bounds& b = mutable_bounds();
  for (std::size_t* f : {&b.automorphism_order, &b.subgroup_search, &b.enumerate_order, &b.coset_space,
                         &b.exhaustive_iso, &b.hom_search})
    *f = std::max(*f, order);
}

}  // namespace bracoid
