#include "heapmod/exact.hpp"

#include <algorithm>
#include <set>

namespace heapmod {

ExactnessResult check_exact_at(const HomMorphism& f, const HomMorphism& g) {
  ExactnessResult res;
  if (g.cod->empty()) {
    res.empty_codomain = true;
    return res;
  }
  std::set<Elem> image_f(f.map.begin(), f.map.end());
  std::set<Elem> image_g(g.map.begin(), g.map.end());
  for (Elem e : image_g) {
    std::set<Elem> fiber;
    for (Elem x = 0; x < g.dom->size(); ++x)
      if (g.map[x] == e) fiber.insert(x);
    if (fiber == image_f) res.witnesses.push_back(e);
  }
  res.exact = !res.witnesses.empty();
  return res;
}

bool is_short_exact(const HomMorphism& f, const HomMorphism& g) {
  ExactnessResult r = check_exact_at(f, g);
  if (!r.exact) return false;
  std::set<Elem> img(f.map.begin(), f.map.end());
  if (img.size() != static_cast<size_t>(f.dom->size())) return false;  // injective
  std::set<Elem> gim(g.map.begin(), g.map.end());
  return gim.size() == static_cast<size_t>(g.cod->size());  // surjective
}

KernelPair kernel_pair(const HomMorphism& h) {
  PullbackResult pb = pullback(h, h);
  KernelPair kp;
  kp.object = pb.object;
  kp.carrier = pb.carrier;
  kp.p1 = HomMorphism{kp.object, h.dom, pb.to_left};
  kp.p2 = HomMorphism{kp.object, h.dom, pb.to_right};
  if (!kp.object->empty()) {
    if (auto v = check_hom_morphism(*kp.object, *h.dom, kp.p1.map))
      throw VerificationFailure(*v);
    if (auto v = check_hom_morphism(*kp.object, *h.dom, kp.p2.map))
      throw VerificationFailure(*v);
  }
  return kp;
}

bool exactness_transfer(const HomMorphism& f, const HomMorphism& g, Elem o_m, Elem o_n,
                        Elem o_p) {
  const HomPtr m = f.dom, n = f.cod, p = g.cod;
  if (m->empty() || n->empty() || p->empty())
    throw EmptyHeapError();
  PointedPtr pm = functor_G(m, o_m);
  PointedPtr pn = functor_G(n, o_n);
  PointedPtr pp = functor_G(p, o_p);
  const Elem a = f.map[o_m], b = g.map[o_n];
  std::vector<Elem> alpha(m->size()), beta(n->size());
  for (Elem x = 0; x < m->size(); ++x) alpha[x] = n->heap.br(f.map[x], a, o_n);
  for (Elem y = 0; y < n->size(); ++y) beta[y] = p->heap.br(g.map[y], b, o_p);
  if (!is_pointed_morphism(*pm, *pn, alpha))
    throw InconsistentDecomposition("alpha is not a pointed morphism");
  if (!is_pointed_morphism(*pn, *pp, beta))
    throw InconsistentDecomposition("beta is not a pointed morphism");
  std::set<Elem> im_alpha(alpha.begin(), alpha.end());
  std::set<Elem> ker_beta;
  for (Elem y = 0; y < n->size(); ++y)
    if (beta[y] == o_p) ker_beta.insert(y);
  const bool pointed_side = (im_alpha == ker_beta);
  const bool heap_side = check_exact_at(f, g).exact;
  if (pointed_side != heap_side)
    throw VerificationFailure(
        Violation{"exactness-transfer", {o_m, o_n, o_p}, "the biconditional failed"});
  return heap_side;
}

bool exactness_aligned_route(const HomMorphism& f, const HomMorphism& g) {
  ExactnessResult r = check_exact_at(f, g);
  if (!r.exact) return false;
  const Elem o_p = r.witnesses.front();
  // pick o_N over o_P inside f(M), then o_M over o_N
  Elem o_n = -1, o_m = -1;
  std::set<Elem> img(f.map.begin(), f.map.end());
  for (Elem y = 0; y < g.dom->size(); ++y)
    if (g.map[y] == o_p && img.count(y)) {
      o_n = y;
      break;
    }
  if (o_n < 0) return false;
  for (Elem x = 0; x < f.dom->size(); ++x)
    if (f.map[x] == o_n) {
      o_m = x;
      break;
    }
  PointedPtr pm = functor_G(f.dom, o_m);
  PointedPtr pn = functor_G(f.cod, o_n);
  PointedPtr pp = functor_G(g.cod, o_p);
  if (!is_pointed_morphism(*pm, *pn, f.map))
    throw InconsistentDecomposition("aligned f is not pointed");
  if (!is_pointed_morphism(*pn, *pp, g.map))
    throw InconsistentDecomposition("aligned g is not pointed");
  std::set<Elem> im(f.map.begin(), f.map.end());
  std::set<Elem> ker;
  for (Elem y = 0; y < g.dom->size(); ++y)
    if (g.map[y] == o_p) ker.insert(y);
  return im == ker;
}

bool is_barr_exact(const Fork& fork) {
  const HomMorphism& f = fork.f;
  const HomMorphism& g = fork.g;
  const HomMorphism& h = fork.h;
  for (Elem x = 0; x < f.dom->size(); ++x)
    if (h.map[f.map[x]] != h.map[g.map[x]]) return false;
  // kernel pair: (m -> (f m, g m)) must be a bijection onto {(a,b): h a = h b};
  // commuting with the projections forces exactly this candidate map.
  KernelPair kp = kernel_pair(h);
  if (kp.carrier.size() != static_cast<size_t>(f.dom->size())) return false;
  std::vector<char> hit(kp.carrier.size(), 0);
  std::vector<Elem> cand(f.dom->size());
  for (Elem x = 0; x < f.dom->size(); ++x) {
    auto it = std::find(kp.carrier.begin(), kp.carrier.end(),
                        std::make_pair(f.map[x], g.map[x]));
    if (it == kp.carrier.end()) return false;
    size_t i = static_cast<size_t>(it - kp.carrier.begin());
    if (hit[i]) return false;
    hit[i] = 1;
    cand[x] = static_cast<Elem>(i);
  }
  if (!f.dom->empty() && check_hom_morphism(*f.dom, *kp.object, cand)) return false;
  // coequalizer: h must factor through coeq(f,g) by an isomorphism
  Coequalizer ce = coequalizer(f, g);
  std::vector<Elem> factor(ce.object->size(), -1);
  for (Elem y = 0; y < h.dom->size(); ++y) {
    Elem c = ce.class_of[y];
    if (factor[c] == -1)
      factor[c] = h.map[y];
    else if (factor[c] != h.map[y])
      return false;  // h does not coequalize to a well-defined map
  }
  // bijective onto P
  std::set<Elem> values(factor.begin(), factor.end());
  if (values.size() != factor.size()) return false;
  if (values.size() != static_cast<size_t>(h.cod->size())) return false;
  if (check_hom_morphism(*ce.object, *h.cod, factor)) return false;
  return true;
}

BarrReport barr_equivalence(const Fork& fork) {
  BarrReport rep;
  rep.barr_exact = is_barr_exact(fork);
  const HomPtr n = fork.h.dom;
  const HomPtr p = fork.h.cod;
  ProductResult pr = product_hom({n, n});
  const int nn = n->size();
  for (Elem o = 0; o < nn; ++o) {
    rep.basepoints.push_back(o);
    // h_o(a,b) = h([a,b,o])
    std::vector<Elem> ho(static_cast<size_t>(nn) * nn);
    for (Elem a = 0; a < nn; ++a)
      for (Elem b = 0; b < nn; ++b)
        ho[static_cast<size_t>(a) * nn + b] = fork.h.map[n->heap.br(a, b, o)];
    HomMorphism ho_m{pr.object, p, ho};
    if (auto v = check_hom_morphism(*pr.object, *p, ho))
      throw VerificationFailure(*v);
    std::vector<Elem> fg(fork.f.dom->size());
    for (Elem x = 0; x < fork.f.dom->size(); ++x)
      fg[x] = fork.f.map[x] * nn + fork.g.map[x];
    HomMorphism fg_m{fork.f.dom, pr.object, fg};
    if (!fork.f.dom->empty()) {
      if (auto v = check_hom_morphism(*fork.f.dom, *pr.object, fg))
        throw VerificationFailure(*v);
    }
    // short exact at h(o) with (f,g) injective and h_o surjective
    ExactnessResult ex = check_exact_at(fg_m, ho_m);
    bool short_exact = false;
    if (ex.exact) {
      Elem target = fork.h.map[o];
      bool at_target =
          std::find(ex.witnesses.begin(), ex.witnesses.end(), target) != ex.witnesses.end();
      std::set<Elem> img(fg.begin(), fg.end());
      bool inj = img.size() == fg.size();
      std::set<Elem> gim(ho.begin(), ho.end());
      bool surj = gim.size() == static_cast<size_t>(p->size());
      short_exact = at_target && inj && surj;
    }
    rep.sequence_short_exact.push_back(short_exact);
  }
  rep.equivalent = true;
  for (bool s : rep.sequence_short_exact)
    if (s != rep.barr_exact) rep.equivalent = false;
  return rep;
}

}  // namespace heapmod
