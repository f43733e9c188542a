// Exact sequences of heaps of T-modules: the ring-theoretic notion
// (f(M) = g^{-1}(e)), its transfer to R(T)-modules, and Barr exactness.
#pragma once

#include "heapmod/category.hpp"

namespace heapmod {

struct SequenceDiag {
  std::vector<HomPtr> objects;      // length >= 3
  std::vector<HomMorphism> arrows;  // composable chain, arrows[i]: objects[i] -> objects[i+1]
};

struct Fork {
  HomMorphism f, g;  // M -> N
  HomMorphism h;     // N -> P
};

struct ExactnessResult {
  bool exact = false;
  std::vector<Elem> witnesses;  // all e in g(N) with f(M) = g^{-1}(e)
  bool empty_codomain = false;  // P = {} is outside the definition's scope
};

// All exactness witnesses of the composable pair (f: M->N, g: N->P).
ExactnessResult check_exact_at(const HomMorphism& f, const HomMorphism& g);

bool is_short_exact(const HomMorphism& f, const HomMorphism& g);

struct KernelPair {
  HomPtr object;  // {(a,b) : h(a) = h(b)} with componentwise structure
  std::vector<std::pair<Elem, Elem>> carrier;
  HomMorphism p1, p2;
};

KernelPair kernel_pair(const HomMorphism& h);

struct InconsistentDecomposition : HeapmodError {
  explicit InconsistentDecomposition(const std::string& msg)
      : HeapmodError("inconsistent pointed decomposition: " + msg) {}
};

// Prop.-style transfer: with chosen basepoints, f = alpha + h and g = beta + k
// with alpha, beta pointed morphisms; heap exactness of (f,g) must coincide
// with Im(alpha) = ker(beta). Returns the common verdict; throws
// VerificationFailure if the two sides disagree, InconsistentDecomposition if
// the pointed parts fail to be morphisms.
bool exactness_transfer(const HomMorphism& f, const HomMorphism& g, Elem o_m, Elem o_n,
                        Elem o_p);

// The companion route: for an exact pair, aligned basepoints (g(o_N) = o_P,
// f(o_M) = o_N) make (f, g) themselves an exact pair of pointed morphisms.
bool exactness_aligned_route(const HomMorphism& f, const HomMorphism& g);

// Barr exactness: (f,g) is the kernel pair of h (isomorphism commuting with
// the projections) and h is the coequalizer of (f,g).
bool is_barr_exact(const Fork& fork);

struct BarrReport {
  bool barr_exact = false;
  // per basepoint o in N: short exactness of M -> N x N -> P at h(o)
  std::vector<Elem> basepoints;
  std::vector<bool> sequence_short_exact;
  bool equivalent = false;  // barr_exact agrees with every per-o verdict
};

// Builds h_o(a,b) = h([a,b,o]) and the sequence M -> N x N -> P, sweeping all
// o in N (the "exists one, hence all" clause).
BarrReport barr_equivalence(const Fork& fork);

}  // namespace heapmod
