// Finite trusses and finite rings.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "heapmod/heap.hpp"

namespace heapmod {

struct FiniteTruss {
  FiniteHeap heap;
  std::vector<Elem> mul;  // flat n*n
  std::optional<Elem> unit;

  int size() const { return heap.n; }
  Elem times(Elem s, Elem t) const { return mul[static_cast<size_t>(s) * heap.n + t]; }
  Elem br(Elem x, Elem y, Elem z) const { return heap.br(x, y, z); }
  bool empty() const { return heap.empty(); }

  // Preferred basepoint: the unit when declared, else the smallest id.
  Elem default_basepoint() const { return unit ? *unit : 0; }
};

using TrussPtr = std::shared_ptr<const FiniteTruss>;

struct FiniteRing {
  FiniteGroup group;
  std::vector<Elem> mul;
  std::optional<Elem> unit;

  int size() const { return group.n; }
  Elem times(Elem s, Elem t) const { return mul[static_cast<size_t>(s) * group.n + t]; }
};

using RingPtr = std::shared_ptr<const FiniteRing>;

// First associativity/T1/T2/unit violation, nullopt if valid. The heap is
// assumed validated.
std::optional<Violation> check_truss(const FiniteHeap& heap, const std::vector<Elem>& mul,
                                     std::optional<Elem> unit);

FiniteTruss validate_truss(FiniteHeap heap, std::vector<Elem> mul, std::optional<Elem> unit);

std::optional<Violation> check_ring(const FiniteGroup& group, const std::vector<Elem>& mul,
                                    std::optional<Elem> unit);

FiniteRing validate_ring(FiniteGroup group, std::vector<Elem> mul, std::optional<Elem> unit);

// T(R): same carrier and multiplication, heap from the additive group.
FiniteTruss truss_from_ring(const FiniteRing& r);

// Z_n as a unital ring.
FiniteRing cyclic_ring(int n);

// Sub-truss of T(Z_m) on a subset of residues; throws if not closed.
FiniteTruss residue_subtruss(int m, const std::vector<int>& residues,
                             bool declare_unit = false);

bool is_truss_morphism(const FiniteTruss& dom, const FiniteTruss& cod,
                       const std::vector<Elem>& map);

// All truss morphisms dom -> cod (bracket and product preserving; units not
// required). Enumerated via retract group homomorphisms plus a target shift.
std::vector<std::vector<Elem>> all_truss_morphisms(const FiniteTruss& dom,
                                                   const FiniteTruss& cod);

// All heap morphisms dom -> cod.
std::vector<std::vector<Elem>> all_heap_morphisms(const FiniteHeap& dom, const FiniteHeap& cod);

}  // namespace heapmod
