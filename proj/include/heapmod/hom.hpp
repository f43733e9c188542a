// Heaps of T-modules: the ternary action t |>_m n, its equivalent
// presentations (basepoint family, Delta form), the pointed correspondence,
// affine R(T)-modules and the isotropic T_u correspondence.
#pragma once

#include "heapmod/module.hpp"

namespace heapmod {

struct HeapOfModules {
  TrussPtr truss;
  FiniteHeap heap;
  std::vector<Elem> taction;  // |T| * |M| * |M|: t |>_m n
  std::optional<bool> isotropic;  // set when the truss is unital

  Elem act(Elem t, Elem m, Elem n) const {
    return taction[(static_cast<size_t>(t) * heap.n + m) * heap.n + n];
  }
  int size() const { return heap.n; }
  bool empty() const { return heap.empty(); }
};

using HomPtr = std::shared_ptr<const HeapOfModules>;

std::optional<Violation> check_hom(const FiniteTruss& t, const FiniteHeap& heap,
                                   const std::vector<Elem>& taction);

// Exhaustive HM1 (each |>_m is a module action) and HM2 (base change), plus
// the standard consequences t|>_m m = m and t|>_m n = [n, t|>_n m, m].
HomPtr validate_hom(const TrussPtr& t, FiniteHeap heap, std::vector<Elem> taction);

// For certified componentwise constructions (products, kernel pairs): full
// validation within the quartic budget; above it HM2 runs in full and HM1 is
// checked on the basepoint slice, the others being its induced structures.
HomPtr make_hom_trusted(const TrussPtr& t, FiniteHeap heap, std::vector<Elem> taction);

// t |>_m n := [t.n, t.m, m]; each |>_m equals the m-induced action.
HomPtr hom_from_module(const ModulePtr& m);

// Pointed correspondence: H(G) with t |>_x y = t.y - t.x + x.
HomPtr functor_H(const PointedPtr& g);

// G(M;e) with action |>_e. Throws EmptyHeapError.
PointedPtr functor_G(const HomPtr& m, Elem e);

struct HomMorphism {
  HomPtr dom;
  HomPtr cod;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
};

std::optional<Violation> check_hom_morphism(const HeapOfModules& dom, const HeapOfModules& cod,
                                            const std::vector<Elem>& map);

HomMorphism validate_hom_morphism(const HomPtr& dom, const HomPtr& cod,
                                  std::vector<Elem> map);

// All morphisms of heaps of T-modules dom -> cod (same truss).
std::vector<std::vector<Elem>> all_hom_morphisms(const HeapOfModules& dom,
                                                 const HeapOfModules& cod);

// G on morphisms: tau_{phi(e)}^f o phi, a pointed morphism G(M;e) -> G(N;f).
std::vector<Elem> transport_G(const HomMorphism& phi, Elem e, Elem f);

// ---------------------------------------------------------------------------
// Delta form: Delta(m)(t) = the endomorphism n -> t |>_m n.

struct DeltaForm {
  HomPtr source;
  // endo[(t*n+m)] = the map n -> t |>_m n, stored as image vectors
  std::vector<std::vector<Elem>> endo_of;  // indexed t * |M| + m

  const std::vector<Elem>& endo(Elem t, Elem m) const {
    return endo_of[static_cast<size_t>(t) * source->size() + m];
  }
};

DeltaForm delta_form(const HomPtr& m);

struct ConditionViolation : HeapmodError {
  Violation violation;
  explicit ConditionViolation(Violation v)
      : HeapmodError("Delta condition failed: " + v.to_string()), violation(std::move(v)) {}
};

// Checks on a raw candidate taction (not necessarily valid): each Delta(m) is
// a truss morphism T -> E(M), plus conditions (a) Delta(e)(t) o c_e = c_e and
// (b) tau_e^f o Delta(e)(t) o tau_f^e = Delta(f)(t). Returns the first failed
// condition; nullopt means both hold.
std::optional<Violation> check_delta_conditions(const FiniteTruss& t, const FiniteHeap& heap,
                                                const std::vector<Elem>& taction);

// ---------------------------------------------------------------------------
// Affine R(T)-modules: heaps of T(R(T))-modules where the ring zero acts by
// returning the basepoint.

struct AffineModule {
  UniversalRing rt;
  HomPtr source;  // the underlying heap of T-modules
  // (r, m, n) -> r ~|>_m n
  std::function<Elem(const SymElem&, Elem, Elem)> act;
};

// Extension of scalars along iota_T; the general-element law is evaluated via
// the pointed route at the structure's basepoint and verified independent of
// that choice. Throws on an empty carrier with a non-empty check domain.
AffineModule to_affine(const HomPtr& m, const UniversalRing& rt);

// Restriction of scalars along iota_T; a table identity with the source.
HomPtr from_affine(const AffineModule& a);

// ---------------------------------------------------------------------------
// Isotropic correspondence with T_u.

struct HomOverUnitalExtension {
  const UnitalExtension* ext = nullptr;
  HomPtr source;
  std::function<Elem(const SymElem&, Elem, Elem)> act;  // T_u-element action
};

// Phi: unique extension with j_T(t) acting as t and the unit as the identity.
HomOverUnitalExtension extend_isotropic(const HomPtr& m, const UnitalExtension& ext);

// Xi: restriction along j_T; a table identity with the source on fixtures.
HomPtr restrict_isotropic(const HomOverUnitalExtension& m);

struct NotIsotropic : HeapmodError {
  Violation violation;
  explicit NotIsotropic(Violation v)
      : HeapmodError("not isotropic: " + v.to_string()), violation(std::move(v)) {}
};

// Restriction of a heap of modules over a finite unital truss to the image of
// a (conceptual) j; requires isotropy and throws NotIsotropic otherwise.
HomPtr require_isotropic(const HomPtr& m);

// Singleton heap of modules over t.
HomPtr star_hom(const TrussPtr& t);
// Empty heap of modules over t.
HomPtr empty_hom(const TrussPtr& t);

}  // namespace heapmod
