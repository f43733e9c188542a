// Brute-force isomorphism search for small structures: backtracking over
// carrier bijections respecting declared operation tables and constraints.
// Complete for carriers <= 12.
#pragma once

#include "heapmod/hom.hpp"

namespace heapmod {

struct IsoSpec {
  int n = 0;  // both carriers must have this size
  // table pairs (A-side, B-side), flattened with the carrier stride
  std::vector<std::pair<const std::vector<Elem>*, const std::vector<Elem>*>> ternary;
  std::vector<std::pair<const std::vector<Elem>*, const std::vector<Elem>*>> binary;
  std::vector<std::pair<const std::vector<Elem>*, const std::vector<Elem>*>> unary;
  std::vector<std::pair<Elem, Elem>> constants;  // image of an A-constant is pinned
  std::vector<std::pair<Elem, Elem>> pinned;     // extra constraints (e.g. projections)
};

// Smallest-image-first backtracking; the returned map is re-validated against
// every table before being returned.
std::optional<std::vector<Elem>> iso_search(const IsoSpec& spec);

std::optional<std::vector<Elem>> iso_search_heaps(const FiniteHeap& a, const FiniteHeap& b);
std::optional<std::vector<Elem>> iso_search_groups(const FiniteGroup& a, const FiniteGroup& b);
std::optional<std::vector<Elem>> iso_search_trusses(const FiniteTruss& a, const FiniteTruss& b);
std::optional<std::vector<Elem>> iso_search_rings(const FiniteRing& a, const FiniteRing& b);

// Same truss on both sides; respects bracket and every t-slice of the taction.
std::optional<std::vector<Elem>> iso_search_homs(
    const HeapOfModules& a, const HeapOfModules& b,
    const std::vector<std::pair<Elem, Elem>>& pinned = {});

}  // namespace heapmod
