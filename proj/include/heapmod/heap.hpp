// Finite abelian heaps: ternary Cayley tables, retracts, translations,
// sub-heap congruences and quotients.
#pragma once

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "heapmod/group.hpp"

namespace heapmod {

struct FiniteHeap {
  int n = 0;
  std::vector<Elem> bracket;  // flat n*n*n, bracket[(x*n+y)*n+z]

  // Canonical internal form: non-empty heaps carry a basepoint and the retract
  // group at it; the ternary table and the group table must agree.
  Elem basepoint = 0;        // meaningful iff n > 0
  FiniteGroup retract_grp;   // G(H; basepoint) when n > 0

  Elem br(Elem x, Elem y, Elem z) const {
    return bracket[(static_cast<size_t>(x) * n + y) * n + z];
  }
  bool empty() const { return n == 0; }
  bool contains(Elem x) const { return x >= 0 && x < n; }
};

using HeapPtr = std::shared_ptr<const FiniteHeap>;

// First H1/H2/abelian violation in lexicographic order, nullopt if valid.
std::optional<Violation> check_heap(int n, const std::vector<Elem>& bracket);

// Exhaustive validation (H1 over all 5-tuples, H2 over pairs, abelian over
// triples) plus the retract redundancy check. Throws AxiomViolation.
FiniteHeap validate_heap(int n, std::vector<Elem> bracket);

// H(G): bracket(x,y,z) = x - y + z.
FiniteHeap heap_from_group(const FiniteGroup& g);

// H(G) for carriers built by certified componentwise constructions (products,
// kernel pairs): the cubic group check runs always; the quintic H1 sweep is
// skipped above this cap, where it follows from group associativity.
constexpr int kExhaustiveHeapCap = 16;
FiniteHeap heap_from_group_trusted(const FiniteGroup& g);

// G(H;e): add(x,y) = [x,e,y], zero = e, neg(x) = [e,x,e]. Throws EmptyHeapError.
FiniteGroup retract(const FiniteHeap& h, Elem e);

struct HeapMorphism {
  HeapPtr dom;
  HeapPtr cod;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
};

// First bracket-compatibility violation, nullopt if f is a heap morphism.
std::optional<Violation> check_heap_morphism(const FiniteHeap& dom, const FiniteHeap& cod,
                                             const std::vector<Elem>& map);

struct MorphismDiagnostics {
  bool ok = false;
  std::optional<Violation> violation;
  // Retract pair witnessing Remark-style group linearity: f is a group
  // homomorphism G(dom; e) -> G(cod; f(e)).
  std::optional<std::pair<Elem, Elem>> group_hom_pair;
};

MorphismDiagnostics validate_heap_morphism(const HeapMorphism& f);

// tau_a^b: x -> [x,a,b]; an automorphism of H.
HeapMorphism translation(const HeapPtr& h, Elem a, Elem b);

// Tr(H): the distinct translation maps under composition; carrier ids index
// `maps`, `rep` holds one (a,b) pair per translation, identity at id 0.
struct TranslationGroup {
  HeapPtr heap;
  FiniteGroup grp;                          // product = composition
  std::vector<std::vector<Elem>> maps;      // maps[i] is the i-th translation
  std::vector<std::pair<Elem, Elem>> rep;   // representative (a,b), (-1,-1) for id on empty heap

  // id of tau_a^b in the carrier
  Elem id_of(Elem a, Elem b) const;
};

TranslationGroup translation_group(const HeapPtr& h);

// Tr(f): tau_a^b -> tau_{f(a)}^{f(b)}; checked well-defined and a group hom.
GroupHom transport(const TranslationGroup& dom, const TranslationGroup& cod,
                   const HeapMorphism& f);

// The pair-group realization (H x H)/~ with (x,y)~(x',y') iff y' = [x',x,y]:
// carrier = classes, identity = class of (x,x), inverse of (x,y) = (y,x).
struct PairGroupRealization {
  FiniteGroup grp;
  std::vector<int> class_of;  // index by x*n+y
  std::vector<std::pair<Elem, Elem>> rep;
  // Verified anti-isomorphism Tr(H) -> classes, tau_x^y -> class(x,y).
  std::vector<Elem> from_translation;
};

PairGroupRealization pair_group_realization(const HeapPtr& h);

// Sub-heap machinery. `subheap` must be non-empty and bracket-closed.
struct SubheapCongruence {
  HeapPtr heap;
  std::vector<Elem> subheap;    // sorted
  std::vector<int> class_of;    // partition induced by ~S
  int num_classes = 0;
};

bool is_subheap(const FiniteHeap& h, const std::vector<Elem>& s);

// Throws NotASubheap if s is empty or not closed.
SubheapCongruence subheap_congruence(const HeapPtr& h, std::vector<Elem> s);

struct HeapQuotient {
  HeapPtr quotient;
  HeapMorphism projection;
  std::vector<int> class_of;
};

// H/S with the canonical projection; the class bracket is verified
// representative-independent. Throws NotASubheap.
HeapQuotient heap_quotient(const HeapPtr& h, const std::vector<Elem>& s);

// All congruences of h as partitions (class_of vectors with dense class ids in
// order of first occurrence). Intended for carriers <= 6.
std::vector<std::vector<int>> all_heap_congruences(const FiniteHeap& h);

// True if the partition respects the bracket on all componentwise-related triples.
bool is_heap_congruence(const FiniteHeap& h, const std::vector<int>& class_of);

}  // namespace heapmod
