#pragma once

#include <cstddef>

namespace bracoid {

// Size limits for the exhaustive searches. The defaults keep the full test
// suite at desk scale; the CLI can raise them with --max-order or the
// BRACOID_MAX_ORDER environment variable.
struct Bounds {
  std::size_t automorphism_order = 24;  // |N| for Aut(N) / Hol(N)
  std::size_t subgroup_search = 48;     // |P| for generic subgroup lattices
  std::size_t enumerate_order = 8;      // |N| for holomorph classification
  std::size_t coset_space = 8;          // |G/G'| for Hopf-Galois enumeration
  std::size_t exhaustive_iso = 16;      // |G| for non-reduced isomorphism search
  std::size_t hom_search = 16;          // |G| for the brace-quotient detector
};

// Process-wide limits. Set once at startup (before any worker threads) and
// treat as read-only afterwards.
Bounds& mutable_bounds();
inline const Bounds& bounds() { return mutable_bounds(); }

// Raises every limit to at least `order` (used by --max-order).
void raise_bounds(std::size_t order);

}  // namespace bracoid
