// Symbolic carriers of the form (finite abelian group) x Z^d with closed-form
// operations: the universal ring R(T), Dorroh extensions, the unital truss
// extension T_u, and the window verifiers that certify their laws.
//
// Z-coordinates are exact int64. Every identity the library evaluates is a
// polynomial of degree <= 2 per Z-coordinate with group-valued coefficients,
// and all certified sweeps stay inside the derived window, so int64 never
// overflows on any reachable input.
#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "heapmod/truss.hpp"

namespace heapmod {

struct SymElem {
  Elem g = 0;
  std::array<i64, 3> z{0, 0, 0};

  bool operator==(const SymElem&) const = default;
  bool operator<(const SymElem& o) const { return std::tie(g, z) < std::tie(o.g, o.z); }
};

// Carrier (gpart) x Z^zdim with componentwise abelian-group structure; the heap
// bracket is a-b+c in that group.
struct SymCarrier {
  FiniteGroup gpart;  // size >= 1
  int zdim = 0;       // 0..3

  SymElem zero() const;
  SymElem add(const SymElem& a, const SymElem& b) const;
  SymElem neg(const SymElem& a) const;
  SymElem sub(const SymElem& a, const SymElem& b) const;
  SymElem bracket(const SymElem& a, const SymElem& b, const SymElem& c) const;
  SymElem scalar(i64 c, const SymElem& a) const;

  // Derived default window radius: 2*exp(gpart)+2. A window of this radius
  // contains a full residue system mod exp(gpart) and >= 3 points per
  // coordinate, which certifies degree-<=2 identities for all of Z.
  int default_window_radius() const { return 2 * gpart.exponent() + 2; }

  i64 window_count(int radius) const;
  // Deterministic enumeration of the window grid.
  std::vector<SymElem> window(int radius) const;

  std::string show(const SymElem& e) const;
};

using SymFn1 = std::function<SymElem(const SymElem&)>;
using SymFn2 = std::function<SymElem(const SymElem&, const SymElem&)>;

struct SymbolicRing {
  SymCarrier car;
  SymFn2 mul;
  std::optional<SymElem> unit;
  std::string descriptor;  // closed-form product, printable
  int window_radius = 4;
  std::string name;

  SymElem zero() const { return car.zero(); }
};

struct SymbolicTruss {
  SymCarrier car;  // heap = componentwise bracket
  SymFn2 mul;
  std::optional<SymElem> unit;
  std::string descriptor;
  int window_radius = 4;
  std::string name;
};

// Uniform view of a truss whose carrier is already in retract form (the group
// zero is the basepoint o). Finite trusses wrap with zdim = 0.
struct TrussView {
  SymCarrier car;
  SymFn2 mul;
  std::optional<SymElem> unit;
  std::string name;
};

TrussView view_of_truss(const TrussPtr& t, Elem basepoint);
TrussView view_of_symbolic(const SymbolicTruss& t);

// Wrap a finite ring as a zdim-0 symbolic ring.
SymbolicRing symbolic_of_finite_ring(const RingPtr& r, const std::string& name);

// ---------------------------------------------------------------------------
// Universal ring R(T)

struct UniversalRing {
  SymbolicRing ring;  // carrier G(T;o) (+) Z; zero (o,0)
  TrussPtr truss;     // null for a symbolic source
  Elem basepoint = -1;

  // iota_T(t) = (t,1); only for finite sources
  SymElem embed(Elem t) const;
};

// R(T) at basepoint o; for the empty truss this is the zero ring (trivial
// carrier, zdim 0). Product per the closed form
//   (t,m)(s,n) = (ts + (n-1)to + (m-1)os + (m-1)(n-1)o^2, mn).
UniversalRing universal_ring(const TrussPtr& t, Elem basepoint);
UniversalRing universal_ring(const TrussPtr& t);  // default basepoint
// Generic construction over a truss view (used for R(T_u) and Z-trusses).
SymbolicRing universal_ring_of_view(const TrussView& v, const std::string& name);

// ---------------------------------------------------------------------------
// Dorroh extension R_u: carrier R (+) Z, (r,u)(s,v) = (rs + v r + u s, uv),
// unit (0,1).
SymbolicRing dorroh_ring(const SymbolicRing& base);

// ---------------------------------------------------------------------------
// Unital truss extension T_u, realized inside T(R(T)_u) as the coset
// {((x,m),1-m)}, stored as pairs (x,m).

struct UnitalExtension {
  SymbolicTruss tu;      // carrier G(T;o) (+) Z, unit (o,0)
  SymbolicRing rtu;      // R(T)_u, the host ring
  TrussPtr truss;        // source (may be empty truss)
  Elem basepoint = -1;   // o (ignored for the empty source)

  SymElem embed(Elem t) const;              // j_T(t) = (t,1)
  SymElem host_elem(const SymElem& x) const;  // ((x,m),1-m) in R(T)_u
};

UnitalExtension unital_truss_extension(const TrussPtr& t);

// The unique unital factorization of a truss morphism f: T -> T' (T' a unital
// finite truss) through j_T. Throws NotAMorphism if f is not a truss morphism,
// VerificationFailure if any factorization law fails on the window.
struct UnitalFactorization {
  std::vector<Elem> f;                      // the original morphism
  std::function<Elem(const SymElem&)> ftilde;  // T_u -> T'
};

UnitalFactorization factor_through_unital_extension(const UnitalExtension& ext,
                                                    const TrussPtr& cod,
                                                    const std::vector<Elem>& f);

// ---------------------------------------------------------------------------
// Lifting a truss morphism phi: T -> T(R) to the ring morphism R(T) -> R,
// phihat(t,n) = phi(t) + (n-1) phi(o).

struct LiftedMorphism {
  SymFn1 hom;
  i64 checks = 0;  // number of window evaluations performed
};

// phi maps carrier elements of T to elements of R; verified to be a truss
// morphism into T(R) first. Window checks: additivity, multiplicativity,
// T(phihat) o iota = phi, and the decomposition (t,n) = iota(t)+(n-1)iota(o)
// that pins uniqueness.
LiftedMorphism lift_morphism(const UniversalRing& rt,
                             const std::function<SymElem(Elem)>& phi,
                             const SymbolicRing& target);

// ---------------------------------------------------------------------------
// Prop.-style Dorroh commutation: R(T)_u and R(T_u) with mutually inverse
// canonical unital homomorphisms, certified on the window.

struct DorrohCommutation {
  SymbolicRing rtu;   // R(T)_u
  SymbolicRing rtu2;  // R(T_u)
  SymFn1 phihat;      // R(T)_u -> R(T_u)
  SymFn1 psihat;      // R(T_u) -> R(T)_u
  i64 checks = 0;
};

DorrohCommutation check_dorroh_commutation(const TrussPtr& t);

// ---------------------------------------------------------------------------
// Window verifiers. Each returns the first violation in enumeration order.

// Ring laws. For zdim <= 1 carriers: associativity and both distributivities
// over all window triples. For zdim >= 2 the triple sweeps are out of desk
// range; only the unit laws and additive structure are swept (the artifact
// certifies those rings through their universal-property checks instead).
std::optional<Violation> check_symbolic_ring(const SymbolicRing& r);

// Truss laws: associativity over window triples; T1/T2 through the retract
// reduction (t[a,e,b] = [ta,te,tb] with e the carrier zero), which is
// equivalent to full distributivity and keeps the sweep three-dimensional.
std::optional<Violation> check_symbolic_truss(const SymbolicTruss& t);

// f respects +, *, and (when both sides are unital) the units, on all window
// pairs of A.
std::optional<Violation> check_ring_hom_window(const SymbolicRing& A, const SymbolicRing& B,
                                               const SymFn1& f, const std::string& tag);

// g(f(x)) == x on the window of A.
std::optional<Violation> check_inverse_window(const SymbolicRing& A, const SymFn1& f,
                                              const SymFn1& g, const std::string& tag);

// The canonical basepoint-change isomorphism R(T;o) ~= R(T;o2), verified as a
// unital-compatible ring isomorphism on the window (both directions).
struct SymbolicRingIso {
  SymFn1 fwd;
  SymFn1 bwd;
};
SymbolicRingIso ring_iso_via_lift(const UniversalRing& a, const UniversalRing& b);

// G(T;1_T) with t*s = ts - t - s (unital trusses only): a rng whose Dorroh
// extension reproduces R(T;1_T) table-for-table on the window.
FiniteRing circle_rng(const TrussPtr& t);

}  // namespace heapmod
