// Explicit (co)limits of heaps of T-modules and the slice-category
// correspondence.
#pragma once

#include "heapmod/hom.hpp"

namespace heapmod {

// Diagram plumbing for the CLI check commands.
enum class DiagramShape { Pair, ParallelPair, Cospan, Span, DiscreteFamily, Fork };

struct Diagram {
  DiagramShape shape;
  std::vector<HomPtr> objects;
  std::vector<HomMorphism> morphisms;
};

struct NotASubHeapOfModules : HeapmodError {
  Violation violation;
  explicit NotASubHeapOfModules(Violation v)
      : HeapmodError("not a sub-heap of modules: " + v.to_string()),
        violation(std::move(v)) {}
};

bool is_sub_hom(const HeapOfModules& m, const std::vector<Elem>& sub);

// ---------------------------------------------------------------------------
// Limits

struct Equalizer {
  HomPtr object;
  std::vector<Elem> carrier;  // elements of dom with f = g, sorted
  HomMorphism inclusion;
};

Equalizer equalizer(const HomMorphism& f, const HomMorphism& g);

struct ProductResult {
  HomPtr object;
  std::vector<std::vector<Elem>> projections;  // one carrier map per factor
  std::vector<int> radix;                      // factor sizes (id decoding)
};

// Componentwise structure on the Cartesian carrier (mixed-radix ids, first
// factor most significant). The empty family gives the singleton.
ProductResult product_hom(const std::vector<HomPtr>& factors);

struct PullbackResult {
  HomPtr object;
  std::vector<Elem> to_left;
  std::vector<Elem> to_right;
  std::vector<std::pair<Elem, Elem>> carrier;  // (m,n) pairs with f(m) = g(n)
};

PullbackResult pullback(const HomMorphism& f, const HomMorphism& g);

// ---------------------------------------------------------------------------
// Quotients and generated substructures

struct HomQuotient {
  HomPtr quotient;
  std::vector<int> class_of;
  std::vector<Elem> projection;
};

// M/N for a non-empty sub-heap of modules N; the universal property against a
// morphism g with g(N) = {point} produces a unique factorization.
HomQuotient hom_quotient(const HomPtr& m, const std::vector<Elem>& sub);

// The sub-heap of modules generated by {e} u N u {t |>_e n}: all odd-length
// bracket words (Rem.-style W(X)).
std::vector<Elem> generated_subhom(const HeapOfModules& m, const std::vector<Elem>& sub,
                                   Elem e);

// Oracle: iterative closure under bracket and taction together.
std::vector<Elem> generated_subhom_oracle(const HeapOfModules& m,
                                          const std::vector<Elem>& sub, Elem e);

// ---------------------------------------------------------------------------
// Coequalizers (two routes)

struct Coequalizer {
  HomPtr object;
  std::vector<int> class_of;
  std::vector<Elem> projection;
};

// Route A: H / [[f,g]]_e, the quotient by the sub-heap of modules generated by
// e and the elements [f(x),g(x),e]. Empty domain: the codomain with identity.
Coequalizer coequalizer(const HomMorphism& f, const HomMorphism& g);

// Route B: quotient of H by Im(alpha-beta) + <a-b>_T at chosen basepoints.
Coequalizer coequalizer_pointed_route(const HomMorphism& f, const HomMorphism& g,
                                      Elem dom_base, Elem cod_base);

// ---------------------------------------------------------------------------
// Coproducts: finite part (+) free part, with symbolic elements.

struct CoprodElem {
  Elem g = 0;                  // id in the finite sum group
  std::vector<SymElem> free;   // one component per non-distinguished factor

  bool operator==(const CoprodElem&) const = default;
};

struct Coproduct {
  TrussPtr truss;
  std::vector<HomPtr> factors;   // all non-empty
  std::vector<Elem> basepoints;  // e_i
  int i0 = 0;                    // distinguished index (smallest)
  bool unital_form = false;      // free part in the unital shape
  FiniteGroup gsum;              // (+)_i G(G_i; e_i), mixed radix
  std::vector<int> radix;
  FreeModule fbase;              // rank-one free module shape
  int copies = 0;                // factors - 1

  CoprodElem zero() const;
  CoprodElem add(const CoprodElem& a, const CoprodElem& b) const;
  CoprodElem neg(const CoprodElem& a) const;
  CoprodElem bracket(const CoprodElem& a, const CoprodElem& b, const CoprodElem& c) const;
  CoprodElem scalar(i64 c, const CoprodElem& a) const;
  // the pointed action at the zero basepoint
  CoprodElem pointed_act(Elem t, const CoprodElem& a) const;
  // t |>_x y = t.y - t.x + x
  CoprodElem taction(Elem t, const CoprodElem& x, const CoprodElem& y) const;
  CoprodElem inject(int i, Elem x) const;

  Elem gsum_component(Elem g, int i) const;
  Elem gsum_compose(const std::vector<Elem>& parts) const;

  // deterministic window enumeration (reduced radius)
  std::vector<CoprodElem> window(int radius) const;

  std::string show(const CoprodElem& e) const;
};

// Empty family or all-empty factors give the empty heap (reported by a null
// gsum with factors empty); any empty factor is dropped first.
struct CoproductResult {
  bool empty = false;
  Coproduct c;
};

CoproductResult coproduct(const std::vector<HomPtr>& family, bool unital_form);

// The mediating morphism of a cocone (alpha_i: G_i -> K), as an evaluator.
// Verifies: each pointed part is linear, the map restricts to alpha_i on every
// injection, and the window decomposition certificate that pins uniqueness.
struct CoconeMediator {
  std::function<Elem(const CoprodElem&)> map;
};
CoconeMediator coproduct_mediator(const Coproduct& c,
                                  const std::vector<HomMorphism>& cocone);

// ---------------------------------------------------------------------------
// Pushouts

struct Pushout {
  HomPtr object;
  std::vector<Elem> leg_left;   // K -> P
  std::vector<Elem> leg_right;  // H -> P
};

// P = (G(K;f(e)) (+) G(H;g(e))) / <f-g> for a non-empty peak; an empty peak
// falls back to the coproduct (not handled here).
Pushout pushout(const HomMorphism& f, const HomMorphism& g, Elem peak_base);

// ---------------------------------------------------------------------------
// Slice category correspondence

struct NotSurjectiveProjection : HeapmodError {
  explicit NotSurjectiveProjection(const std::string& msg)
      : HeapmodError("projection not surjective: " + msg) {}
};

// Slice objects in split normal form: G = K (+) Rpart with the projection onto
// the R-part, where Rpart is R(T) (unital case) or R(T)_u. The zero object is
// the distinguished initial object.
struct SliceObject {
  bool zero_object = false;
  TrussPtr truss;
  PointedPtr kernel;      // K with its T-action
  bool over_rtu = false;  // R-part is R(T)_u
  UniversalRing rt;
  // R-part carrier: rt.ring for the unital case, dorroh(rt.ring) otherwise
  SymbolicRing rpart;

  SymElem runit() const;  // the element of the R-part the fiber sits over
};

SliceObject zero_slice(const TrussPtr& t);
SliceObject make_slice_object(const PointedPtr& kernel, const UniversalRing& rt,
                              bool over_rtu);

// M(S): the fiber over the R-part unit, a finite heap of T-modules on the
// kernel carrier. The zero object maps to the empty heap.
HomPtr slice_M(const SliceObject& s);

struct SliceG {
  SliceObject object;
  Coproduct star_join;              // the coproduct * u M it was built from
  // zeta_M: M -> M(G(M)) carrier map (identity on carriers by construction,
  // verified as a structure map)
  std::vector<Elem> zeta;
};

// G(M) = retract of * u M at *, with its projection onto * u * ~ R-part.
// Throws NotSurjectiveProjection if the projection misses a generator (cannot
// happen for non-empty M; kept as the verified error path).
SliceG slice_G(const HomPtr& m);

// epsilon_G: GM(S) -> S, verified bijective, T-linear and pi-commuting on the
// window; x_fiber selects the fiber element (kernel coordinate) used for the
// splitting.
struct SliceCounit {
  std::function<std::pair<Elem, SymElem>(Elem kprime, const SymElem& r)> map;
};
SliceCounit slice_counit(const SliceObject& s, Elem x_fiber);

}  // namespace heapmod
