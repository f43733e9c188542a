// Finite abelian groups as explicit Cayley tables.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "heapmod/common.hpp"

namespace heapmod {

struct FiniteGroup {
  int n = 0;
  std::vector<Elem> add;  // flat n*n, add[x*n+y]
  std::vector<Elem> neg;  // n entries
  Elem zero = 0;

  Elem plus(Elem x, Elem y) const { return add[static_cast<size_t>(x) * n + y]; }
  Elem minus(Elem x, Elem y) const { return plus(x, neg[y]); }
  // x - y + z; the heap bracket of the associated heap
  Elem affine(Elem x, Elem y, Elem z) const { return plus(minus(x, y), z); }

  // c-fold sum of x, c may be negative; reduces c modulo the order of x.
  Elem scalar(i64 c, Elem x) const;

  int order_of(Elem x) const;
  // Least common multiple of element orders (1 for the trivial group).
  int exponent() const;

  // Greedy generating set (empty for the trivial group).
  std::vector<Elem> generators() const;

  bool contains(Elem x) const { return x >= 0 && x < n; }
};

// Exhaustive abelian-group axiom check. Returns the first violation in
// lexicographic order, nullopt if the table is a valid abelian group.
std::optional<Violation> check_group(const FiniteGroup& g);

// Throwing constructor-style validator.
FiniteGroup validate_group(int n, std::vector<Elem> add, std::vector<Elem> neg, Elem zero);

// Z_n as a table group (n >= 1).
FiniteGroup cyclic_group(int n);

// Direct product with lexicographic element ids (a*|b|+b ordering by factors).
FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b);

// A map f: G -> H with f(zero)=zero; stored as a plain image vector.
struct GroupHom {
  const FiniteGroup* dom = nullptr;
  const FiniteGroup* cod = nullptr;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
};

bool is_group_hom(const FiniteGroup& dom, const FiniteGroup& cod, const std::vector<Elem>& map);

// All group homomorphisms dom -> cod, enumerated deterministically
// (by image tuples on a greedy generating set, extended and re-checked).
std::vector<std::vector<Elem>> all_group_homs(const FiniteGroup& dom, const FiniteGroup& cod);

// First isomorphism dom -> cod found, nullopt if none.
std::optional<std::vector<Elem>> find_group_iso(const FiniteGroup& dom, const FiniteGroup& cod);

}  // namespace heapmod
