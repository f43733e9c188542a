#include "heapmod/category.hpp"

#include <algorithm>
#include <set>

namespace heapmod {

bool is_sub_hom(const HeapOfModules& m, const std::vector<Elem>& sub) {
  if (sub.empty()) return false;
  if (!is_subheap(m.heap, sub)) return false;
  std::vector<char> in(m.size(), 0);
  for (Elem x : sub) in[x] = 1;
  for (Elem t = 0; t < m.truss->size(); ++t)
    for (Elem n : sub)
      for (Elem n2 : sub)
        if (!in[m.act(t, n, n2)]) return false;
  return true;
}

namespace {

// Builds the heap of modules on a subset of a parent carrier.
HomPtr sub_hom_on(const HomPtr& parent, const std::vector<Elem>& carrier) {
  const int k = static_cast<int>(carrier.size());
  std::vector<int> idx(parent->size(), -1);
  for (int i = 0; i < k; ++i) idx[carrier[i]] = i;
  std::vector<Elem> bracket(static_cast<size_t>(k) * k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        Elem v = parent->heap.br(carrier[a], carrier[b], carrier[c]);
        if (idx[v] < 0) throw NotASubHeapOfModules(Violation{"bracket-closure", {a, b, c}});
        bracket[(static_cast<size_t>(a) * k + b) * k + c] = idx[v];
      }
  const int nt = parent->truss->size();
  std::vector<Elem> taction(static_cast<size_t>(nt) * k * k);
  for (Elem t = 0; t < nt; ++t)
    for (int m = 0; m < k; ++m)
      for (int n = 0; n < k; ++n) {
        Elem v = parent->act(t, carrier[m], carrier[n]);
        if (idx[v] < 0) throw NotASubHeapOfModules(Violation{"taction-closure", {t, m, n}});
        taction[(static_cast<size_t>(t) * k + m) * k + n] = idx[v];
      }
  return validate_hom(parent->truss, validate_heap(k, std::move(bracket)), std::move(taction));
}

}  // namespace

Equalizer equalizer(const HomMorphism& f, const HomMorphism& g) {
  if (f.dom != g.dom && f.dom->size() != g.dom->size())
    throw SizeMismatch("parallel pair must share a domain");
  Equalizer eq;
  for (Elem x = 0; x < f.dom->size(); ++x)
    if (f.map[x] == g.map[x]) eq.carrier.push_back(x);
  if (eq.carrier.empty()) {
    eq.object = empty_hom(f.dom->truss);
    eq.inclusion = HomMorphism{eq.object, f.dom, {}};
    return eq;
  }
  eq.object = sub_hom_on(f.dom, eq.carrier);
  eq.inclusion = validate_hom_morphism(eq.object, f.dom, eq.carrier);
  return eq;
}

ProductResult product_hom(const std::vector<HomPtr>& factors) {
  ProductResult pr;
  if (factors.empty()) {
    // empty product: terminal object
    TrussPtr t;
    throw SizeMismatch("product of an empty family needs a truss; use star_hom");
  }
  const TrussPtr truss = factors[0]->truss;
  for (auto& f : factors) {
    if (f->truss != truss) throw SizeMismatch("product factors must share the truss");
    pr.radix.push_back(f->size());
    if (f->empty()) {
      pr.object = empty_hom(truss);
      pr.projections.assign(factors.size(), {});
      return pr;
    }
  }
  i64 total = 1;
  for (int r : pr.radix) total *= r;
  const int n = static_cast<int>(total);
  auto decode = [&](Elem id, int i) {
    i64 rem = id;
    for (size_t j = factors.size(); j-- > 0;) {
      i64 c = rem % pr.radix[j];
      if (static_cast<int>(j) == i) return static_cast<Elem>(c);
      rem /= pr.radix[j];
    }
    return Elem{0};
  };
  // product group of the basepoint retracts drives the bracket
  FiniteGroup g = factors[0]->heap.retract_grp;
  for (size_t j = 1; j < factors.size(); ++j)
    g = product_group(g, factors[j]->heap.retract_grp);
  FiniteHeap heap = heap_from_group_trusted(g);
  const int nt = truss->size();
  std::vector<Elem> taction(static_cast<size_t>(nt) * n * n);
  for (Elem t = 0; t < nt; ++t)
    for (Elem m = 0; m < n; ++m)
      for (Elem x = 0; x < n; ++x) {
        i64 acc = 0;
        for (size_t j = 0; j < factors.size(); ++j)
          acc = acc * pr.radix[j] + factors[j]->act(t, decode(m, static_cast<int>(j)),
                                                    decode(x, static_cast<int>(j)));
        taction[(static_cast<size_t>(t) * n + m) * n + x] = static_cast<Elem>(acc);
      }
  pr.object = make_hom_trusted(truss, std::move(heap), std::move(taction));
  pr.projections.resize(factors.size());
  for (size_t j = 0; j < factors.size(); ++j) {
    pr.projections[j].resize(n);
    for (Elem x = 0; x < n; ++x) pr.projections[j][x] = decode(x, static_cast<int>(j));
  }
  return pr;
}

PullbackResult pullback(const HomMorphism& f, const HomMorphism& g) {
  if (f.cod->size() != g.cod->size())
    throw SizeMismatch("pullback legs must share the codomain");
  PullbackResult pb;
  for (Elem m = 0; m < f.dom->size(); ++m)
    for (Elem n = 0; n < g.dom->size(); ++n)
      if (f.map[m] == g.map[n]) pb.carrier.push_back({m, n});
  if (pb.carrier.empty()) {
    pb.object = empty_hom(f.dom->truss);
    return pb;
  }
  ProductResult pr = product_hom({f.dom, g.dom});
  std::vector<Elem> sub;
  for (auto& [m, n] : pb.carrier) sub.push_back(m * g.dom->size() + n);
  pb.object = sub_hom_on(pr.object, sub);
  pb.to_left.resize(sub.size());
  pb.to_right.resize(sub.size());
  for (size_t i = 0; i < pb.carrier.size(); ++i) {
    pb.to_left[i] = pb.carrier[i].first;
    pb.to_right[i] = pb.carrier[i].second;
  }
  return pb;
}

HomQuotient hom_quotient(const HomPtr& m, const std::vector<Elem>& sub) {
  std::vector<Elem> s = sub;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!is_sub_hom(*m, s)) {
    // locate a witness for the error report
    std::vector<char> in(m->size(), 0);
    for (Elem x : s) in[x] = 1;
    for (Elem t = 0; t < m->truss->size(); ++t)
      for (Elem a : s)
        for (Elem b : s)
          if (!in[m->act(t, a, b)])
            throw NotASubHeapOfModules(Violation{"taction-closure", {t, a, b}});
    throw NotASubHeapOfModules(Violation{"bracket-closure", {}});
  }
  auto hp = std::make_shared<FiniteHeap>(m->heap);
  HeapQuotient hq = heap_quotient(hp, s);
  const int k = hq.quotient->n;
  std::vector<Elem> rep(k, -1);
  for (Elem x = 0; x < m->size(); ++x)
    if (rep[hq.class_of[x]] == -1) rep[hq.class_of[x]] = x;
  const int nt = m->truss->size();
  std::vector<Elem> taction(static_cast<size_t>(nt) * k * k);
  for (Elem t = 0; t < nt; ++t)
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        taction[(static_cast<size_t>(t) * k + a) * k + b] =
            hq.class_of[m->act(t, rep[a], rep[b])];
  // class representatives must not matter
  for (Elem t = 0; t < nt; ++t)
    for (Elem a = 0; a < m->size(); ++a)
      for (Elem b = 0; b < m->size(); ++b)
        if (hq.class_of[m->act(t, a, b)] !=
            taction[(static_cast<size_t>(t) * k + hq.class_of[a]) * k + hq.class_of[b]])
          throw VerificationFailure(Violation{"hom-quotient-well-defined", {t, a, b}});
  HomQuotient out;
  out.quotient = validate_hom(m->truss, *hq.quotient, std::move(taction));
  out.class_of = hq.class_of;
  out.projection.resize(m->size());
  for (Elem x = 0; x < m->size(); ++x) out.projection[x] = hq.class_of[x];
  if (auto v = check_hom_morphism(*m, *out.quotient, out.projection))
    throw VerificationFailure(*v);
  return out;
}

std::vector<Elem> generated_subhom(const HeapOfModules& m, const std::vector<Elem>& sub,
                                   Elem e) {
  if (!m.heap.contains(e)) throw ElementNotInCarrier(e, m.size());
  std::vector<char> in(m.size(), 0);
  std::vector<Elem> work;
  auto push = [&](Elem v) {
    if (!in[v]) {
      in[v] = 1;
      work.push_back(v);
    }
  };
  push(e);
  for (Elem x : sub) push(x);
  for (Elem t = 0; t < m.truss->size(); ++t)
    for (Elem x : sub) push(m.act(t, e, x));
  // odd-length bracket words = closure under the ternary bracket
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> cur;
    for (Elem v = 0; v < m.size(); ++v)
      if (in[v]) cur.push_back(v);
    for (Elem a : cur)
      for (Elem b : cur)
        for (Elem c : cur) {
          Elem v = m.heap.br(a, b, c);
          if (!in[v]) {
            in[v] = 1;
            grew = true;
          }
        }
  }
  std::vector<Elem> out;
  for (Elem v = 0; v < m.size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

std::vector<Elem> generated_subhom_oracle(const HeapOfModules& m,
                                          const std::vector<Elem>& sub, Elem e) {
  std::vector<char> in(m.size(), 0);
  in[e] = 1;
  for (Elem x : sub) in[x] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> cur;
    for (Elem v = 0; v < m.size(); ++v)
      if (in[v]) cur.push_back(v);
    for (Elem a : cur)
      for (Elem b : cur) {
        for (Elem c : cur) {
          Elem v = m.heap.br(a, b, c);
          if (!in[v]) {
            in[v] = 1;
            grew = true;
          }
        }
        for (Elem t = 0; t < m.truss->size(); ++t) {
          Elem v = m.act(t, a, b);
          if (!in[v]) {
            in[v] = 1;
            grew = true;
          }
        }
      }
  }
  std::vector<Elem> out;
  for (Elem v = 0; v < m.size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

Coequalizer coequalizer(const HomMorphism& f, const HomMorphism& g) {
  Coequalizer ce;
  const HomPtr& h = f.cod;
  if (f.dom->empty()) {
    ce.object = h;
    ce.class_of.resize(h->size());
    ce.projection.resize(h->size());
    for (Elem x = 0; x < h->size(); ++x) ce.class_of[x] = ce.projection[x] = x;
    return ce;
  }
  const Elem e = h->heap.basepoint;
  std::vector<Elem> gens;
  for (Elem x = 0; x < f.dom->size(); ++x) gens.push_back(h->heap.br(f.map[x], g.map[x], e));
  std::vector<Elem> n = generated_subhom(*h, gens, e);
  HomQuotient q = hom_quotient(h, n);
  ce.object = q.quotient;
  ce.class_of = q.class_of;
  ce.projection = q.projection;
  return ce;
}

Coequalizer coequalizer_pointed_route(const HomMorphism& f, const HomMorphism& g,
                                      Elem dom_base, Elem cod_base) {
  const HomPtr& h = f.cod;
  Coequalizer ce;
  if (f.dom->empty()) return coequalizer(f, g);
  PointedPtr hp = functor_G(h, cod_base);
  const FiniteGroup& grp = hp->group;
  const Elem a = f.map[dom_base], b = g.map[dom_base];
  std::vector<Elem> gens;
  for (Elem x = 0; x < f.dom->size(); ++x) {
    Elem alpha = grp.minus(f.map[x], a);  // pointed part of f
    Elem beta = grp.minus(g.map[x], b);
    gens.push_back(grp.minus(alpha, beta));
  }
  gens.push_back(grp.minus(a, b));
  std::vector<Elem> n = generated_submodule_closure(*hp, gens);
  HomQuotient q = hom_quotient(h, n);
  ce.object = q.quotient;
  ce.class_of = q.class_of;
  ce.projection = q.projection;
  return ce;
}

// ---------------------------------------------------------------------------
// Coproducts

CoprodElem Coproduct::zero() const {
  CoprodElem e;
  e.g = gsum.zero;
  e.free.assign(copies, fbase.car.zero());
  return e;
}

CoprodElem Coproduct::add(const CoprodElem& a, const CoprodElem& b) const {
  CoprodElem r;
  r.g = gsum.plus(a.g, b.g);
  r.free.resize(copies);
  for (int i = 0; i < copies; ++i) r.free[i] = fbase.car.add(a.free[i], b.free[i]);
  return r;
}

CoprodElem Coproduct::neg(const CoprodElem& a) const {
  CoprodElem r;
  r.g = gsum.neg[a.g];
  r.free.resize(copies);
  for (int i = 0; i < copies; ++i) r.free[i] = fbase.car.neg(a.free[i]);
  return r;
}

CoprodElem Coproduct::bracket(const CoprodElem& a, const CoprodElem& b,
                              const CoprodElem& c) const {
  return add(add(a, neg(b)), c);
}

CoprodElem Coproduct::scalar(i64 c, const CoprodElem& a) const {
  CoprodElem r;
  r.g = gsum.scalar(c, a.g);
  r.free.resize(copies);
  for (int i = 0; i < copies; ++i) r.free[i] = fbase.car.scalar(c, a.free[i]);
  return r;
}

Elem Coproduct::gsum_component(Elem g, int i) const {
  i64 rem = g;
  for (size_t j = radix.size(); j-- > 0;) {
    i64 c = rem % radix[j];
    if (static_cast<int>(j) == i) return static_cast<Elem>(c);
    rem /= radix[j];
  }
  return 0;
}

Elem Coproduct::gsum_compose(const std::vector<Elem>& parts) const {
  i64 acc = 0;
  for (size_t j = 0; j < radix.size(); ++j) acc = acc * radix[j] + parts[j];
  return static_cast<Elem>(acc);
}

CoprodElem Coproduct::pointed_act(Elem t, const CoprodElem& a) const {
  CoprodElem r;
  std::vector<Elem> parts(radix.size());
  for (size_t j = 0; j < radix.size(); ++j)
    parts[j] = factors[j]->act(t, basepoints[j], gsum_component(a.g, static_cast<int>(j)));
  r.g = gsum_compose(parts);
  r.free.resize(copies);
  for (int i = 0; i < copies; ++i) r.free[i] = fbase.act_finite(t, a.free[i]);
  return r;
}

CoprodElem Coproduct::taction(Elem t, const CoprodElem& x, const CoprodElem& y) const {
  return add(add(pointed_act(t, y), neg(pointed_act(t, x))), x);
}

CoprodElem Coproduct::inject(int i, Elem x) const {
  CoprodElem r = zero();
  std::vector<Elem> parts(radix.size());
  for (size_t j = 0; j < radix.size(); ++j)
    parts[j] = (static_cast<int>(j) == i) ? x : basepoints[j];
  r.g = gsum_compose(parts);
  if (i != i0) {
    int copy = i < i0 ? i : i - 1;
    r.free[copy] = fbase.basis;
  }
  return r;
}

std::vector<CoprodElem> Coproduct::window(int radius) const {
  std::vector<CoprodElem> out;
  std::vector<std::vector<SymElem>> fw(copies);
  i64 total = gsum.n;
  for (int i = 0; i < copies; ++i) {
    fw[i] = fbase.car.window(radius);
    total *= static_cast<i64>(fw[i].size());
  }
  out.reserve(static_cast<size_t>(total));
  std::vector<size_t> idx(copies, 0);
  for (Elem g = 0; g < gsum.n; ++g) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      CoprodElem e;
      e.g = g;
      e.free.resize(copies);
      for (int i = 0; i < copies; ++i) e.free[i] = fw[i][idx[i]];
      out.push_back(std::move(e));
      int i = copies - 1;
      while (i >= 0 && idx[i] + 1 == fw[i].size()) idx[i--] = 0;
      if (i < 0) break;
      ++idx[i];
    }
  }
  return out;
}

std::string Coproduct::show(const CoprodElem& e) const {
  std::string s = "(" + std::to_string(e.g);
  for (int i = 0; i < copies; ++i) s += "," + fbase.car.show(e.free[i]);
  return s + ")";
}

CoproductResult coproduct(const std::vector<HomPtr>& family, bool unital_form) {
  CoproductResult res;
  std::vector<HomPtr> nonempty;
  for (auto& f : family)
    if (!f->empty()) nonempty.push_back(f);
  if (nonempty.empty()) {
    res.empty = true;
    return res;
  }
  Coproduct& c = res.c;
  c.truss = nonempty[0]->truss;
  for (auto& f : nonempty)
    if (f->truss != c.truss) throw SizeMismatch("coproduct factors must share the truss");
  c.factors = nonempty;
  c.unital_form = unital_form;
  if (unital_form && !c.truss->unit && !c.truss->empty())
    throw HeapmodError("unital coproduct form requires a unital truss");
  c.i0 = 0;
  for (auto& f : c.factors) {
    c.basepoints.push_back(f->heap.basepoint);
    c.radix.push_back(f->size());
  }
  FiniteGroup g = c.factors[0]->heap.retract_grp;
  for (size_t j = 1; j < c.factors.size(); ++j)
    g = product_group(g, c.factors[j]->heap.retract_grp);
  c.gsum = g;
  c.copies = static_cast<int>(c.factors.size()) - 1;
  if (c.truss->empty())
    c.fbase = free_pointed_module(c.truss);
  else
    c.fbase = free_pointed_module(c.truss, c.truss->default_basepoint(), unital_form);
  return res;
}

CoconeMediator coproduct_mediator(const Coproduct& c,
                                  const std::vector<HomMorphism>& cocone) {
  if (cocone.size() != c.factors.size())
    throw SizeMismatch("one cocone leg per coproduct factor");
  const HomPtr k = cocone[0].cod;
  for (size_t i = 0; i < cocone.size(); ++i) {
    if (cocone[i].cod != k) throw SizeMismatch("cocone legs must share the target");
    if (cocone[i].dom != c.factors[i]) throw SizeMismatch("cocone leg domain mismatch");
  }
  if (k->empty()) throw EmptyHeapError();
  std::vector<Elem> a(c.factors.size());
  for (size_t i = 0; i < cocone.size(); ++i) a[i] = cocone[i].map[c.basepoints[i]];
  const Elem c0 = a[c.i0];
  PointedPtr kp = functor_G(k, c0);
  const FiniteGroup grp = kp->group;
  // pointed parts of the legs, into G(K;c0)
  std::vector<std::vector<Elem>> fparts(c.factors.size());
  for (size_t i = 0; i < cocone.size(); ++i) {
    fparts[i].resize(c.factors[i]->size());
    for (Elem x = 0; x < c.factors[i]->size(); ++x)
      fparts[i][x] = grp.minus(cocone[i].map[x], a[i]);
    PointedPtr src = functor_G(c.factors[i], c.basepoints[i]);
    if (!is_pointed_morphism(*src, *kp, fparts[i]))
      throw VerificationFailure(Violation{"cocone-pointed-part", {static_cast<i64>(i)}});
  }
  // free-part universal maps: b_i |-> a_i - a_{i0}
  std::vector<FreeUniversalMap> gammas;
  for (size_t i = 0; i < cocone.size(); ++i) {
    if (static_cast<int>(i) == c.i0) continue;
    gammas.push_back(universal_map(c.fbase, kp, grp.minus(a[i], c0)));
  }
  CoconeMediator med;
  Coproduct cc = c;
  med.map = [cc, fparts, gammas, grp](const CoprodElem& x) {
    Elem acc = grp.zero;
    for (size_t j = 0; j < fparts.size(); ++j)
      acc = grp.plus(acc, fparts[j][cc.gsum_component(x.g, static_cast<int>(j))]);
    for (int i = 0; i < cc.copies; ++i) acc = grp.plus(acc, gammas[i].map(x.free[i]));
    return acc;
  };
  // the mediator restricts to the cocone on every injection
  for (size_t i = 0; i < cocone.size(); ++i)
    for (Elem x = 0; x < c.factors[i]->size(); ++x)
      if (med.map(c.inject(static_cast<int>(i), x)) != cocone[i].map[x])
        throw VerificationFailure(Violation{"mediator-restriction", {static_cast<i64>(i), x}});
  return med;
}

Pushout pushout(const HomMorphism& f, const HomMorphism& g, Elem peak_base) {
  const HomPtr& gpeak = f.dom;
  if (gpeak->empty()) throw EmptyHeapError();
  const HomPtr kside = f.cod;
  const HomPtr hside = g.cod;
  const Elem fe = f.map[peak_base], ge = g.map[peak_base];
  PointedPtr kpt = functor_G(kside, fe);
  PointedPtr hpt = functor_G(hside, ge);
  // product pointed module K (+) H
  FiniteGroup pg = product_group(kpt->group, hpt->group);
  const int nh = hpt->size();
  const int nt = gpeak->truss->size();
  std::vector<Elem> action(static_cast<size_t>(nt) * pg.n);
  for (Elem t = 0; t < nt; ++t)
    for (Elem x = 0; x < pg.n; ++x)
      action[static_cast<size_t>(t) * pg.n + x] =
          kpt->act(t, x / nh) * nh + hpt->act(t, x % nh);
  PointedPtr prod = validate_pointed(gpeak->truss, pg, std::move(action));
  // <f-g>: the pointed submodule generated by (f(x), -g(x))
  std::vector<Elem> gens;
  for (Elem x = 0; x < gpeak->size(); ++x)
    gens.push_back(f.map[x] * nh + hpt->group.neg[g.map[x]]);
  std::vector<Elem> n = generated_submodule_closure(*prod, gens);
  HomPtr p0 = functor_H(prod);
  HomQuotient q = hom_quotient(p0, n);
  Pushout out;
  out.object = q.quotient;
  out.leg_left.resize(kside->size());
  for (Elem x = 0; x < kside->size(); ++x)
    out.leg_left[x] = q.class_of[x * nh + hpt->group.zero];
  out.leg_right.resize(hside->size());
  for (Elem x = 0; x < hside->size(); ++x)
    out.leg_right[x] = q.class_of[kpt->group.zero * nh + x];
  if (auto v = check_hom_morphism(*kside, *out.object, out.leg_left))
    throw VerificationFailure(*v);
  if (auto v = check_hom_morphism(*hside, *out.object, out.leg_right))
    throw VerificationFailure(*v);
  for (Elem x = 0; x < gpeak->size(); ++x)
    if (out.leg_left[f.map[x]] != out.leg_right[g.map[x]])
      throw VerificationFailure(Violation{"pushout-square", {x}});
  return out;
}

// ---------------------------------------------------------------------------
// Slices

SymElem SliceObject::runit() const {
  if (!rpart.unit) throw HeapmodError("R-part must be unital");
  return *rpart.unit;
}

SliceObject zero_slice(const TrussPtr& t) {
  SliceObject s;
  s.zero_object = true;
  s.truss = t;
  s.rt = universal_ring(t);
  s.over_rtu = !(t->unit.has_value());
  s.rpart = s.over_rtu ? dorroh_ring(s.rt.ring) : s.rt.ring;
  return s;
}

SliceObject make_slice_object(const PointedPtr& kernel, const UniversalRing& rt,
                              bool over_rtu) {
  SliceObject s;
  s.truss = kernel->truss;
  s.kernel = kernel;
  s.rt = rt;
  s.over_rtu = over_rtu;
  if (!over_rtu && !rt.ring.unit)
    throw NotSurjectiveProjection("a non-unital R(T) cannot receive a slice projection");
  s.rpart = over_rtu ? dorroh_ring(rt.ring) : rt.ring;
  return s;
}

HomPtr slice_M(const SliceObject& s) {
  if (s.zero_object) return empty_hom(s.truss);
  return functor_H(s.kernel);
}

SliceG slice_G(const HomPtr& m) {
  SliceG out;
  if (m->empty()) {
    out.object = zero_slice(m->truss);
    return out;
  }
  const TrussPtr t = m->truss;
  const bool unital = t->unit.has_value();
  CoproductResult cp = coproduct({star_hom(t), m}, unital);
  out.star_join = cp.c;
  const Elem e = m->heap.basepoint;
  PointedPtr kernel = functor_G(m, e);
  UniversalRing rt = universal_ring(t);
  out.object = make_slice_object(kernel, rt, !unital);
  // the projection hits both R-part generators: pi(u1(*)) = 0_R (the class of
  // (1_T,0)) and pi(u2(x)) = 1_R; recorded as the surjectivity certificate
  const SymElem z = out.object.rpart.zero();
  const SymElem u = out.object.runit();
  if (z == u) throw NotSurjectiveProjection("degenerate R-part");
  // zeta: identity on carriers, M -> M(G(M)) = H(G(M;e))
  HomPtr ms = slice_M(out.object);
  if (ms->size() != m->size()) throw VerificationFailure(Violation{"zeta-carrier", {}});
  out.zeta.resize(m->size());
  for (Elem x = 0; x < m->size(); ++x) out.zeta[x] = x;
  // H(G(M;e)) must reproduce M table-for-table
  if (ms->heap.bracket != m->heap.bracket)
    throw VerificationFailure(Violation{"zeta-bracket-tables", {}});
  if (ms->taction != m->taction)
    throw VerificationFailure(Violation{"zeta-taction-tables", {}});
  return out;
}

SliceCounit slice_counit(const SliceObject& s, Elem x_fiber) {
  if (s.zero_object) throw EmptyHeapError();
  const PointedPtr k = s.kernel;
  if (!k->group.contains(x_fiber)) throw ElementNotInCarrier(x_fiber, k->size());
  // M(S) = H(K); GM(S) splits as G(M(S); x_fiber) (+) R-part; epsilon sends
  // (y, r) to j(tau_x^0 y) + r.x computed in S = K (+) R-part.
  RingModuleView raction = pointed_to_ring_module(k, s.rt);
  const FiniteGroup grp = k->group;
  const bool over_rtu = s.over_rtu;
  SliceCounit eps;
  eps.map = [grp, raction, x_fiber, over_rtu](Elem y, const SymElem& r) {
    // R(T)_u elements act as r0 + u*1 with r0 the R(T) part
    Elem ry;
    if (over_rtu) {
      SymElem r0 = r;
      i64 u = r0.z[1];
      r0.z[1] = 0;
      // (r0, u).x = r0.x + u x
      Elem base = raction.act(r0, x_fiber);
      ry = grp.plus(base, grp.scalar(u, x_fiber));
    } else {
      ry = raction.act(r, x_fiber);
    }
    return std::make_pair(grp.plus(grp.minus(y, x_fiber), ry), r);
  };
  return eps;
}

}  // namespace heapmod
