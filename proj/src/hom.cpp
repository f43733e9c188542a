#include "heapmod/hom.hpp"

#include <algorithm>

namespace heapmod {

std::optional<Violation> check_hom(const FiniteTruss& t, const FiniteHeap& heap,
                                   const std::vector<Elem>& taction) {
  const int nt = t.size(), nm = heap.n;
  if (taction.size() != static_cast<size_t>(nt) * nm * nm)
    return Violation{"hom-table", {}, "taction table not total"};
  auto act = [&](Elem a, Elem m, Elem n) {
    return taction[(static_cast<size_t>(a) * nm + m) * nm + n];
  };
  for (Elem a = 0; a < nt; ++a)
    for (Elem m = 0; m < nm; ++m)
      for (Elem n = 0; n < nm; ++n)
        if (!heap.contains(act(a, m, n))) return Violation{"hom-closure", {a, m, n}};
  // HM1: each |>_m is a T-module structure on the heap
  for (Elem m = 0; m < nm; ++m) {
    std::vector<Elem> slice(static_cast<size_t>(nt) * nm);
    for (Elem a = 0; a < nt; ++a)
      for (Elem n = 0; n < nm; ++n) slice[static_cast<size_t>(a) * nm + n] = act(a, m, n);
    if (auto v = check_module(t, heap, slice)) {
      Violation out = *v;
      out.law = "HM1:" + out.law;
      out.witness.insert(out.witness.begin(), m);
      return out;
    }
  }
  // HM2: base change
  for (Elem a = 0; a < nt; ++a)
    for (Elem m = 0; m < nm; ++m)
      for (Elem n = 0; n < nm; ++n)
        for (Elem e = 0; e < nm; ++e)
          if (act(a, m, n) != heap.br(act(a, e, n), act(a, e, m), m))
            return Violation{"HM2", {a, m, n, e}};
  // consequences
  for (Elem a = 0; a < nt; ++a)
    for (Elem m = 0; m < nm; ++m) {
      if (act(a, m, m) != m) return Violation{"HM2-fix", {a, m}, "t |>_m m != m"};
      for (Elem n = 0; n < nm; ++n)
        if (act(a, m, n) != heap.br(n, act(a, n, m), m))
          return Violation{"HM2-swap", {a, m, n}};
    }
  return std::nullopt;
}

HomPtr validate_hom(const TrussPtr& t, FiniteHeap heap, std::vector<Elem> taction) {
  if (auto v = check_hom(*t, heap, taction)) throw AxiomViolation(*v);
  auto h = std::make_shared<HeapOfModules>();
  h->truss = t;
  h->heap = std::move(heap);
  h->taction = std::move(taction);
  if (t->unit) {
    bool iso = true;
    for (Elem m = 0; m < h->size() && iso; ++m)
      for (Elem n = 0; n < h->size() && iso; ++n)
        if (h->act(*t->unit, m, n) != n) iso = false;
    h->isotropic = iso;
  }
  return h;
}

HomPtr make_hom_trusted(const TrussPtr& t, FiniteHeap heap, std::vector<Elem> taction) {
  const i64 nt = t->size(), nm = heap.n;
  if (nt * nm * nm * nm * nm <= 300'000'000LL) return validate_hom(t, std::move(heap), std::move(taction));
  auto act = [&](Elem a, Elem m, Elem n) {
    return taction[(static_cast<size_t>(a) * nm + m) * nm + n];
  };
  for (Elem a = 0; a < nt; ++a)
    for (Elem m = 0; m < nm; ++m)
      for (Elem n = 0; n < nm; ++n)
        for (Elem e = 0; e < nm; ++e)
          if (act(a, m, n) != heap.br(act(a, e, n), act(a, e, m), m))
            throw AxiomViolation(Violation{"HM2", {a, m, n, e}});
  const Elem bp = heap.basepoint;
  std::vector<Elem> slice(static_cast<size_t>(nt) * nm);
  for (Elem a = 0; a < nt; ++a)
    for (Elem n = 0; n < nm; ++n) slice[static_cast<size_t>(a) * nm + n] = act(a, bp, n);
  if (auto v = check_module(*t, heap, slice)) {
    Violation out = *v;
    out.law = "HM1:" + out.law;
    throw AxiomViolation(out);
  }
  auto h = std::make_shared<HeapOfModules>();
  h->truss = t;
  h->heap = std::move(heap);
  h->taction = std::move(taction);
  if (t->unit) {
    bool iso = true;
    for (Elem m = 0; m < h->size() && iso; ++m)
      for (Elem n = 0; n < h->size() && iso; ++n)
        if (h->act(*t->unit, m, n) != n) iso = false;
    h->isotropic = iso;
  }
  return h;
}

HomPtr hom_from_module(const ModulePtr& m) {
  const int nt = m->truss->size(), nm = m->size();
  std::vector<Elem> taction(static_cast<size_t>(nt) * nm * nm);
  for (Elem a = 0; a < nt; ++a)
    for (Elem x = 0; x < nm; ++x)
      for (Elem n = 0; n < nm; ++n)
        taction[(static_cast<size_t>(a) * nm + x) * nm + n] =
            m->heap.br(m->act(a, n), m->act(a, x), x);
  HomPtr h = validate_hom(m->truss, m->heap, std::move(taction));
  // each |>_m must equal the m-induced module structure
  for (Elem x = 0; x < nm; ++x) {
    ModulePtr ind = induced_action(m, x);
    for (Elem a = 0; a < nt; ++a)
      for (Elem n = 0; n < nm; ++n)
        if (h->act(a, x, n) != ind->act(a, n))
          throw VerificationFailure(Violation{"hom-induced-identity", {a, x, n}});
  }
  return h;
}

HomPtr functor_H(const PointedPtr& g) {
  const int nt = g->truss->size(), nm = g->size();
  FiniteHeap heap = heap_from_group(g->group);
  std::vector<Elem> taction(static_cast<size_t>(nt) * nm * nm);
  for (Elem a = 0; a < nt; ++a)
    for (Elem x = 0; x < nm; ++x)
      for (Elem y = 0; y < nm; ++y)
        taction[(static_cast<size_t>(a) * nm + x) * nm + y] =
            g->group.plus(g->group.minus(g->act(a, y), g->act(a, x)), x);
  return validate_hom(g->truss, std::move(heap), std::move(taction));
}

PointedPtr functor_G(const HomPtr& m, Elem e) {
  if (m->empty()) throw EmptyHeapError();
  if (!m->heap.contains(e)) throw ElementNotInCarrier(e, m->size());
  FiniteGroup grp = retract(m->heap, e);
  const int nt = m->truss->size(), nm = m->size();
  std::vector<Elem> action(static_cast<size_t>(nt) * nm);
  for (Elem a = 0; a < nt; ++a)
    for (Elem x = 0; x < nm; ++x) action[static_cast<size_t>(a) * nm + x] = m->act(a, e, x);
  return validate_pointed(m->truss, std::move(grp), std::move(action));
}

std::optional<Violation> check_hom_morphism(const HeapOfModules& dom, const HeapOfModules& cod,
                                            const std::vector<Elem>& map) {
  if (auto v = check_heap_morphism(dom.heap, cod.heap, map)) return v;
  for (Elem a = 0; a < dom.truss->size(); ++a)
    for (Elem m = 0; m < dom.size(); ++m)
      for (Elem n = 0; n < dom.size(); ++n)
        if (map[dom.act(a, m, n)] != cod.act(a, map[m], map[n]))
          return Violation{"hom-morphism", {a, m, n}};
  return std::nullopt;
}

HomMorphism validate_hom_morphism(const HomPtr& dom, const HomPtr& cod,
                                  std::vector<Elem> map) {
  if (auto v = check_hom_morphism(*dom, *cod, map)) throw NotAMorphism(*v);
  return HomMorphism{dom, cod, std::move(map)};
}

std::vector<std::vector<Elem>> all_hom_morphisms(const HeapOfModules& dom,
                                                 const HeapOfModules& cod) {
  std::vector<std::vector<Elem>> out;
  for (auto& map : all_heap_morphisms(dom.heap, cod.heap)) {
    bool ok = true;
    for (Elem a = 0; a < dom.truss->size() && ok; ++a)
      for (Elem m = 0; m < dom.size() && ok; ++m)
        for (Elem n = 0; n < dom.size() && ok; ++n)
          if (map[dom.act(a, m, n)] != cod.act(a, map[m], map[n])) ok = false;
    if (ok) out.push_back(map);
  }
  return out;
}

std::vector<Elem> transport_G(const HomMorphism& phi, Elem e, Elem f) {
  const FiniteHeap& ch = phi.cod->heap;
  std::vector<Elem> out(phi.dom->size());
  for (Elem x = 0; x < phi.dom->size(); ++x) out[x] = ch.br(phi.map[x], phi.map[e], f);
  PointedPtr a = functor_G(phi.dom, e);
  PointedPtr b = functor_G(phi.cod, f);
  if (!is_pointed_morphism(*a, *b, out))
    throw VerificationFailure(Violation{"transport-pointed", {e, f}});
  return out;
}

DeltaForm delta_form(const HomPtr& m) {
  DeltaForm d;
  d.source = m;
  const int nt = m->truss->size(), nm = m->size();
  d.endo_of.resize(static_cast<size_t>(nt) * nm);
  for (Elem a = 0; a < nt; ++a)
    for (Elem x = 0; x < nm; ++x) {
      std::vector<Elem> e(nm);
      for (Elem n = 0; n < nm; ++n) e[n] = m->act(a, x, n);
      d.endo_of[static_cast<size_t>(a) * nm + x] = std::move(e);
    }
  return d;
}

std::optional<Violation> check_delta_conditions(const FiniteTruss& t, const FiniteHeap& heap,
                                                const std::vector<Elem>& taction) {
  const int nt = t.size(), nm = heap.n;
  if (taction.size() != static_cast<size_t>(nt) * nm * nm)
    return Violation{"hom-table", {}, "taction table not total"};
  auto act = [&](Elem a, Elem m, Elem n) {
    return taction[(static_cast<size_t>(a) * nm + m) * nm + n];
  };
  // Delta(m) must be a truss morphism T -> E(M): each value is a heap
  // endomorphism, bracket goes to the pointwise bracket, product to
  // composition (T-associativity).
  for (Elem a = 0; a < nt; ++a)
    for (Elem m = 0; m < nm; ++m) {
      std::vector<Elem> endo(nm);
      for (Elem n = 0; n < nm; ++n) endo[n] = act(a, m, n);
      if (auto v = check_heap_morphism(heap, heap, endo)) {
        Violation out = *v;
        out.law = "Delta-endo";
        out.witness = {a, m};
        return out;
      }
    }
  for (Elem a = 0; a < nt; ++a)
    for (Elem b = 0; b < nt; ++b)
      for (Elem c = 0; c < nt; ++c)
        for (Elem m = 0; m < nm; ++m)
          for (Elem n = 0; n < nm; ++n)
            if (act(t.br(a, b, c), m, n) !=
                heap.br(act(a, m, n), act(b, m, n), act(c, m, n)))
              return Violation{"Delta-bracket", {a, b, c, m, n}};
  for (Elem a = 0; a < nt; ++a)
    for (Elem b = 0; b < nt; ++b)
      for (Elem m = 0; m < nm; ++m)
        for (Elem n = 0; n < nm; ++n)
          if (act(t.times(a, b), m, n) != act(a, m, act(b, m, n)))
            return Violation{"Delta-Tassoc", {a, b, m, n}};
  // (a): Delta(e)(t) o c_e = c_e
  for (Elem a = 0; a < nt; ++a)
    for (Elem e = 0; e < nm; ++e)
      if (act(a, e, e) != e) return Violation{"Delta-a", {a, e}};
  // (b): tau_e^f o Delta(e)(t) o tau_f^e = Delta(f)(t)
  for (Elem a = 0; a < nt; ++a)
    for (Elem e = 0; e < nm; ++e)
      for (Elem f = 0; f < nm; ++f)
        for (Elem m = 0; m < nm; ++m) {
          Elem lhs = heap.br(act(a, e, heap.br(m, f, e)), e, f);
          if (lhs != act(a, f, m)) return Violation{"Delta-b", {a, e, f, m}};
        }
  return std::nullopt;
}

AffineModule to_affine(const HomPtr& m, const UniversalRing& rt) {
  AffineModule out;
  out.rt = rt;
  out.source = m;
  HomPtr keep = m;
  if (m->empty()) {
    out.act = [](const SymElem&, Elem, Elem) -> Elem {
      throw EmptyHeapError();
    };
    return out;
  }
  const Elem e = m->heap.basepoint;
  const FiniteGroup grp = retract(m->heap, e);
  const Elem o = rt.basepoint;
  // (t,k) ~|>_m n = t|>_m n  +_e (k-1) (o |>_e [n,m,e]); the sign under (k-1)
  // makes the ring zero (o,0) act as the basepoint projection.
  out.act = [keep, grp, e, o](const SymElem& r, Elem m_, Elem n_) {
    Elem base = keep->act(r.g, m_, n_);
    Elem diff = keep->act(o, e, keep->heap.br(n_, m_, e));
    return grp.plus(base, grp.scalar(r.z[0] - 1, diff));
  };
  // independence of the auxiliary basepoint e
  const int rk = reduced_radius(grp.exponent());
  auto win = rt.ring.car.window(rk);
  for (Elem e2 = 0; e2 < m->size(); ++e2) {
    FiniteGroup g2 = retract(m->heap, e2);
    for (const SymElem& r : win)
      for (Elem x = 0; x < m->size(); ++x)
        for (Elem n = 0; n < m->size(); ++n) {
          Elem base = m->act(r.g, x, n);
          Elem diff = m->act(o, e2, m->heap.br(n, x, e2));
          if (out.act(r, x, n) != g2.plus(base, g2.scalar(r.z[0] - 1, diff)))
            throw VerificationFailure(Violation{"affine-e-independence", {e2, r.g, x, n}});
        }
  }
  // affine condition and the iota laws
  const SymElem zero = rt.ring.zero();
  for (Elem x = 0; x < m->size(); ++x)
    for (Elem n = 0; n < m->size(); ++n) {
      if (out.act(zero, x, n) != x)
        throw VerificationFailure(Violation{"affine-zero", {x, n}});
      for (Elem a = 0; a < m->truss->size(); ++a)
        if (out.act(rt.embed(a), x, n) != m->act(a, x, n))
          throw VerificationFailure(Violation{"affine-iota", {a, x, n}});
    }
  return out;
}

HomPtr from_affine(const AffineModule& a) {
  const HomPtr& src = a.source;
  if (src->empty()) return src;
  const int nt = a.rt.truss->size(), nm = src->size();
  std::vector<Elem> taction(static_cast<size_t>(nt) * nm * nm);
  for (Elem t = 0; t < nt; ++t)
    for (Elem m = 0; m < nm; ++m)
      for (Elem n = 0; n < nm; ++n)
        taction[(static_cast<size_t>(t) * nm + m) * nm + n] = a.act(a.rt.embed(t), m, n);
  return validate_hom(src->truss, src->heap, std::move(taction));
}

HomOverUnitalExtension extend_isotropic(const HomPtr& m, const UnitalExtension& ext) {
  HomOverUnitalExtension out;
  out.ext = &ext;
  out.source = m;
  HomPtr keep = m;
  if (m->empty()) {
    out.act = [](const SymElem&, Elem, Elem) -> Elem {
      throw EmptyHeapError();
    };
    return out;
  }
  const Elem e = m->heap.basepoint;
  const FiniteGroup grp = retract(m->heap, e);
  const Elem o = ext.basepoint;
  // (x,u) ~|>_m n = x|>_m n + (u-1)(o|>_m n - n), an affine combination, so
  // any retract evaluates it identically.
  out.act = [keep, grp, o](const SymElem& t, Elem m_, Elem n_) {
    Elem xm = keep->act(t.g, m_, n_);
    Elem om = keep->act(o, m_, n_);
    return grp.plus(xm, grp.scalar(t.z[0] - 1, grp.minus(om, n_)));
  };
  // unit acts as the identity; j_T(t) acts as t
  for (Elem x = 0; x < m->size(); ++x)
    for (Elem n = 0; n < m->size(); ++n) {
      if (out.act(*ext.tu.unit, x, n) != n)
        throw VerificationFailure(Violation{"isotropic-unit", {x, n}});
      for (Elem a = 0; a < m->truss->size(); ++a)
        if (out.act(ext.embed(a), x, n) != m->act(a, x, n))
          throw VerificationFailure(Violation{"isotropic-embed", {a, x, n}});
    }
  return out;
}

HomPtr restrict_isotropic(const HomOverUnitalExtension& m) {
  const HomPtr& src = m.source;
  if (src->empty()) return src;
  const int nt = src->truss->size(), nm = src->size();
  std::vector<Elem> taction(static_cast<size_t>(nt) * nm * nm);
  for (Elem t = 0; t < nt; ++t)
    for (Elem x = 0; x < nm; ++x)
      for (Elem n = 0; n < nm; ++n)
        taction[(static_cast<size_t>(t) * nm + x) * nm + n] =
            m.act(m.ext->embed(t), x, n);
  return validate_hom(src->truss, src->heap, std::move(taction));
}

HomPtr require_isotropic(const HomPtr& m) {
  if (!m->truss->unit) throw HeapmodError("isotropy is defined over unital trusses");
  for (Elem x = 0; x < m->size(); ++x)
    for (Elem n = 0; n < m->size(); ++n)
      if (m->act(*m->truss->unit, x, n) != n)
        throw NotIsotropic(Violation{"isotropy", {*m->truss->unit, x, n}});
  return m;
}

HomPtr star_hom(const TrussPtr& t) {
  FiniteHeap h = heap_from_group(cyclic_group(1));
  std::vector<Elem> taction(static_cast<size_t>(t->size()), 0);
  return validate_hom(t, std::move(h), std::move(taction));
}

HomPtr empty_hom(const TrussPtr& t) {
  FiniteHeap h = validate_heap(0, {});
  return validate_hom(t, std::move(h), {});
}

}  // namespace heapmod
