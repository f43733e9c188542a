// Modules over trusses: T-modules on heaps, pointed T-modules on groups, the
// ring-module correspondence over R(T), generated submodules, and free
// pointed modules (symbolic carriers).
#pragma once

#include "heapmod/symbolic.hpp"

namespace heapmod {

struct TrussModule {
  TrussPtr truss;
  FiniteHeap heap;
  std::vector<Elem> action;  // |T| x |M|
  std::vector<Elem> absorbers;
  bool unital_action = false;  // recorded when the truss is unital

  Elem act(Elem t, Elem m) const { return action[static_cast<size_t>(t) * heap.n + m]; }
  int size() const { return heap.n; }
};

using ModulePtr = std::shared_ptr<const TrussModule>;

std::optional<Violation> check_module(const FiniteTruss& t, const FiniteHeap& heap,
                                      const std::vector<Elem>& action);

// Exhaustive M1-M3; computes the absorber set. Throws AxiomViolation.
ModulePtr validate_module(const TrussPtr& t, FiniteHeap heap, std::vector<Elem> action);

// t |>_e m = [t.m, t.e, e]; e becomes an absorber.
ModulePtr induced_action(const ModulePtr& m, Elem e);

struct NotInduced : HeapmodError {
  Violation violation;
  explicit NotInduced(Violation v)
      : HeapmodError("not an induced submodule: " + v.to_string()), violation(std::move(v)) {}
};

// N must be a non-empty sub-heap; induced means t |>_e n stays in N for all
// t in T and n,e in N.
bool is_induced_submodule(const TrussModule& m, const std::vector<Elem>& sub);

struct ModuleQuotient {
  ModulePtr quotient;
  std::vector<int> class_of;
  std::vector<Elem> projection;  // carrier map M -> M/N
};

// Throws NotASubheap / NotInduced; the projection is verified to be a module
// epimorphism.
ModuleQuotient module_quotient(const ModulePtr& m, const std::vector<Elem>& sub);

// ---------------------------------------------------------------------------
// Pointed modules

struct PointedModule {
  TrussPtr truss;
  FiniteGroup group;
  std::vector<Elem> action;  // |T| x |G|
  bool unital_action = false;

  Elem act(Elem t, Elem g) const { return action[static_cast<size_t>(t) * group.n + g]; }
  int size() const { return group.n; }
};

using PointedPtr = std::shared_ptr<const PointedModule>;

std::optional<Violation> check_pointed(const FiniteTruss& t, const FiniteGroup& g,
                                       const std::vector<Elem>& action);

// Exhaustive bracket law, additivity, multiplicativity; additionally verifies
// the endomorphism route (lambda: T -> T(End G) is a truss morphism).
PointedPtr validate_pointed(const TrussPtr& t, FiniteGroup g, std::vector<Elem> action);

bool is_pointed_morphism(const PointedModule& a, const PointedModule& b,
                         const std::vector<Elem>& map);

// All T-linear group homomorphisms a -> b (same truss).
std::vector<std::vector<Elem>> all_pointed_morphisms(const PointedModule& a,
                                                     const PointedModule& b);

// ---------------------------------------------------------------------------
// The correspondence with R(T)-modules: (t,n).g = t.g + (n-1) o.g.

struct RingModuleView {
  const UniversalRing* rt = nullptr;
  PointedPtr pointed;
  std::function<Elem(const SymElem&, Elem)> act;
};

// Builds the R(T)-action and certifies the module laws on the window.
RingModuleView pointed_to_ring_module(const PointedPtr& g, const UniversalRing& rt);

// Restriction along iota: t.m = (t,1).m; round-trips are table identities.
PointedPtr ring_module_to_pointed(const RingModuleView& m);

// ---------------------------------------------------------------------------
// Generated submodules

// Brute-force closure of X under +, -, and every t. (the oracle).
std::vector<Elem> generated_submodule_closure(const PointedModule& g, std::vector<Elem> xs);

// Closed form for a single generator: {t.x + n(e.x) + m.x} with e a fixed
// truss element; empty truss: the cyclic subgroup generated by x.
std::vector<Elem> generated_submodule_closed_form(const PointedModule& g, Elem x, Elem e);

// ---------------------------------------------------------------------------
// Free pointed modules (one generator; finite sums as copies)

struct FreeModule {
  SymCarrier car;
  TrussView view;  // source truss in retract form (zdim 0 when finite)
  std::shared_ptr<const FiniteTruss> truss;          // set when finite
  std::shared_ptr<const SymbolicTruss> sym_truss;    // set for symbolic sources
  Elem basepoint = -1;  // o for finite sources
  bool unital_form = false;
  SymElem basis;
  int window_radius = 4;
  // action of a truss element (as a view element) on a module element
  std::function<SymElem(const SymElem&, const SymElem&)> act;

  SymElem act_finite(Elem t, const SymElem& x) const {
    return act(SymElem{t, {0, 0, 0}}, x);
  }
};

// Cor.-style free object: carrier G(T;o) (+) Z (+) Z with
//   t.(s,n,p) = (ts + (n-1)to + pt, n+p, 0),  basis (o,0,1);
// unital form: carrier G(T;1) (+) Z with t.(s,n) = (ts + (n-1)t, n), basis (1,1).
// The empty truss yields Z with basis 1.
FreeModule free_pointed_module(const TrussPtr& t, Elem basepoint, bool unital_form);
FreeModule free_pointed_module(const TrussPtr& t);
FreeModule free_module_of_view(const TrussView& v, bool unital_form);

// Window check of the pointed-module laws of a free module. High-arity sweeps
// use the reduced certified radius (full residue system + 3 points per
// coordinate), which certifies the same identities.
std::optional<Violation> check_free_module(const FreeModule& f);

// Reduced certified radius for k = exponent of the group part: the smallest r
// whose window holds a full residue system mod k and >= 3 points.
int reduced_radius(int k);

// The universal map F -> G determined by basis |-> g, verified on the window:
// phi(t,n,p) = t.g + (n-1)(o.g) + p.g, the unique pointed morphism.
struct FreeUniversalMap {
  std::function<Elem(const SymElem&)> map;
};
FreeUniversalMap universal_map(const FreeModule& f, const PointedPtr& target, Elem g);

// Direct sum of `copies` copies of a rank-one free module; universal maps take
// one target element per copy. Elements are stored per-copy.
struct FreeSum {
  FreeModule base;
  int copies = 1;

  // insertion of the i-th generator
  std::vector<SymElem> generator(int i) const;
};
FreeSum free_pointed_module_sum(const TrussPtr& t, int copies);
std::function<Elem(const std::vector<SymElem>&)> universal_map_sum(
    const FreeSum& f, const PointedPtr& target, const std::vector<Elem>& gs);

// The odd-coset style truss mZ+r as a symbolic truss (carrier Z via z |-> mz+r);
// requires r*r = r (mod m) for closure.
SymbolicTruss coset_truss(int m, int r);

}  // namespace heapmod
