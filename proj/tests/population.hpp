#pragma once

#include <string>
#include <vector>

#include "bracoid/bracoid.hpp"
#include "bracoid/classify.hpp"
#include "bracoid/io.hpp"

namespace population {

struct Named {
  std::string name;
  bracoid::SkewBracoid bracoid;
};

inline const std::vector<std::string>& small_specs() {
  static const std::vector<std::string> s{"C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "D3"};
  return s;
}

inline const std::vector<std::string>& order_eight_specs() {
  static const std::vector<std::string> s{"C8", "C4xC2", "C2xC2xC2", "D4", "Q8"};
  return s;
}

/// One bracoid per equivalence class for every N of order ≤ 6 (G = λ-image),
/// plus the dihedral family with 2n ≤ max_family_order.
inline std::vector<Named> small(std::size_t max_family_order = 12) {
  std::vector<Named> out;
  for (const auto& spec : small_specs())
    for (const auto& r : bracoid::classify(spec))
      out.push_back({spec + "#" + std::to_string(r.equivalence_class_id), r.bracoid});
  for (std::size_t n = 1; 2 * n <= max_family_order; ++n)
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0)
        out.push_back({"D" + std::to_string(n) + "/C" + std::to_string(d), bracoid::dihedral_on_cyclic(n, d)});
  return out;
}

}  // namespace population
