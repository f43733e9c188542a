#include "heapmod/module.hpp"

#include <algorithm>

namespace heapmod {

std::optional<Violation> check_module(const FiniteTruss& t, const FiniteHeap& heap,
                                      const std::vector<Elem>& action) {
  const int nt = t.size(), nm = heap.n;
  if (action.size() != static_cast<size_t>(nt) * nm)
    return Violation{"module-table", {}, "action table not total"};
  auto act = [&](Elem a, Elem m) { return action[static_cast<size_t>(a) * nm + m]; };
  for (Elem a = 0; a < nt; ++a)
    for (Elem m = 0; m < nm; ++m)
      if (!heap.contains(act(a, m))) return Violation{"module-closure", {a, m}};
  for (Elem a = 0; a < nt; ++a)
    for (Elem b = 0; b < nt; ++b)
      for (Elem m = 0; m < nm; ++m)
        if (act(a, act(b, m)) != act(t.times(a, b), m)) return Violation{"M1", {a, b, m}};
  for (Elem a = 0; a < nt; ++a)
    for (Elem b = 0; b < nt; ++b)
      for (Elem c = 0; c < nt; ++c)
        for (Elem m = 0; m < nm; ++m)
          if (act(t.br(a, b, c), m) != heap.br(act(a, m), act(b, m), act(c, m)))
            return Violation{"M2", {a, b, c, m}};
  for (Elem a = 0; a < nt; ++a)
    for (Elem m = 0; m < nm; ++m)
      for (Elem n = 0; n < nm; ++n)
        for (Elem e = 0; e < nm; ++e)
          if (act(a, heap.br(m, n, e)) != heap.br(act(a, m), act(a, n), act(a, e)))
            return Violation{"M3", {a, m, n, e}};
  return std::nullopt;
}

ModulePtr validate_module(const TrussPtr& t, FiniteHeap heap, std::vector<Elem> action) {
  if (auto v = check_module(*t, heap, action)) throw AxiomViolation(*v);
  auto m = std::make_shared<TrussModule>();
  m->truss = t;
  m->heap = std::move(heap);
  m->action = std::move(action);
  for (Elem e = 0; e < m->heap.n; ++e) {
    bool absorber = true;
    for (Elem a = 0; a < t->size() && absorber; ++a)
      if (m->act(a, e) != e) absorber = false;
    if (absorber) m->absorbers.push_back(e);
  }
  if (t->unit) {
    m->unital_action = true;
    for (Elem e = 0; e < m->heap.n; ++e)
      if (m->act(*t->unit, e) != e) m->unital_action = false;
  }
  return m;
}

ModulePtr induced_action(const ModulePtr& m, Elem e) {
  if (!m->heap.contains(e)) throw ElementNotInCarrier(e, m->heap.n);
  std::vector<Elem> action(m->action.size());
  for (Elem a = 0; a < m->truss->size(); ++a)
    for (Elem x = 0; x < m->heap.n; ++x)
      action[static_cast<size_t>(a) * m->heap.n + x] =
          m->heap.br(m->act(a, x), m->act(a, e), e);
  return validate_module(m->truss, m->heap, std::move(action));
}

bool is_induced_submodule(const TrussModule& m, const std::vector<Elem>& sub) {
  if (!is_subheap(m.heap, sub) || sub.empty()) return false;
  for (Elem a = 0; a < m.truss->size(); ++a)
    for (Elem n : sub)
      for (Elem e : sub) {
        Elem v = m.heap.br(m.act(a, n), m.act(a, e), e);
        if (std::find(sub.begin(), sub.end(), v) == sub.end()) return false;
      }
  return true;
}

ModuleQuotient module_quotient(const ModulePtr& m, const std::vector<Elem>& sub) {
  auto hp = std::make_shared<FiniteHeap>(m->heap);
  SubheapCongruence sc = subheap_congruence(hp, sub);
  if (!is_induced_submodule(*m, sc.subheap)) {
    Violation v{"induced-submodule", {}};
    for (Elem a = 0; a < m->truss->size(); ++a)
      for (Elem n : sc.subheap)
        for (Elem e : sc.subheap) {
          Elem val = m->heap.br(m->act(a, n), m->act(a, e), e);
          if (std::find(sc.subheap.begin(), sc.subheap.end(), val) == sc.subheap.end()) {
            v.witness = {a, n, e};
            v.detail = "t |>_e n escapes N";
            throw NotInduced(v);
          }
        }
    throw NotInduced(v);
  }
  HeapQuotient hq = heap_quotient(hp, sc.subheap);
  const int k = hq.quotient->n;
  std::vector<Elem> rep(k, -1);
  for (Elem x = 0; x < m->heap.n; ++x)
    if (rep[hq.class_of[x]] == -1) rep[hq.class_of[x]] = x;
  std::vector<Elem> action(static_cast<size_t>(m->truss->size()) * k);
  for (Elem a = 0; a < m->truss->size(); ++a)
    for (int c = 0; c < k; ++c)
      action[static_cast<size_t>(a) * k + c] = hq.class_of[m->act(a, rep[c])];
  // the action must be representative-independent
  for (Elem a = 0; a < m->truss->size(); ++a)
    for (Elem x = 0; x < m->heap.n; ++x)
      if (hq.class_of[m->act(a, x)] !=
          action[static_cast<size_t>(a) * k + hq.class_of[x]])
        throw VerificationFailure(Violation{"module-quotient-well-defined", {a, x}});
  ModuleQuotient out;
  out.quotient = validate_module(m->truss, *hq.quotient, std::move(action));
  out.class_of = hq.class_of;
  out.projection.resize(m->heap.n);
  for (Elem x = 0; x < m->heap.n; ++x) out.projection[x] = hq.class_of[x];
  return out;
}

// ---------------------------------------------------------------------------

std::optional<Violation> check_pointed(const FiniteTruss& t, const FiniteGroup& g,
                                       const std::vector<Elem>& action) {
  const int nt = t.size(), ng = g.n;
  if (action.size() != static_cast<size_t>(nt) * ng)
    return Violation{"pointed-table", {}, "action table not total"};
  auto act = [&](Elem a, Elem x) { return action[static_cast<size_t>(a) * ng + x]; };
  for (Elem a = 0; a < nt; ++a)
    for (Elem x = 0; x < ng; ++x)
      if (!g.contains(act(a, x))) return Violation{"pointed-closure", {a, x}};
  for (Elem a = 0; a < nt; ++a)
    for (Elem x = 0; x < ng; ++x)
      for (Elem y = 0; y < ng; ++y)
        if (act(a, g.plus(x, y)) != g.plus(act(a, x), act(a, y)))
          return Violation{"additivity", {a, x, y}};
  for (Elem a = 0; a < nt; ++a)
    for (Elem b = 0; b < nt; ++b) {
      for (Elem x = 0; x < ng; ++x)
        if (act(a, act(b, x)) != act(t.times(a, b), x))
          return Violation{"multiplicativity", {a, b, x}};
      for (Elem c = 0; c < nt; ++c)
        for (Elem x = 0; x < ng; ++x)
          if (act(t.br(a, b, c), x) !=
              g.plus(g.minus(act(a, x), act(b, x)), act(c, x)))
            return Violation{"bracket-law", {a, b, c, x}};
    }
  return std::nullopt;
}

PointedPtr validate_pointed(const TrussPtr& t, FiniteGroup g, std::vector<Elem> action) {
  if (auto v = check_group(g)) throw AxiomViolation(*v);
  if (auto v = check_pointed(*t, g, action)) throw AxiomViolation(*v);
  // Endomorphism route: every lambda_t is a group endomorphism and lambda is a
  // truss morphism T -> T(End(G)).
  const int ng = g.n;
  auto act = [&](Elem a, Elem x) { return action[static_cast<size_t>(a) * ng + x]; };
  for (Elem a = 0; a < t->size(); ++a) {
    std::vector<Elem> lam(ng);
    for (Elem x = 0; x < ng; ++x) lam[x] = act(a, x);
    if (!is_group_hom(g, g, lam))
      throw AxiomViolation(Violation{"lambda-endo", {a}, "lambda_t is not additive"});
  }
  auto p = std::make_shared<PointedModule>();
  p->truss = t;
  p->group = std::move(g);
  p->action = std::move(action);
  if (t->unit) {
    p->unital_action = true;
    for (Elem x = 0; x < ng; ++x)
      if (p->act(*t->unit, x) != x) p->unital_action = false;
  }
  return p;
}

bool is_pointed_morphism(const PointedModule& a, const PointedModule& b,
                         const std::vector<Elem>& map) {
  if (!is_group_hom(a.group, b.group, map)) return false;
  for (Elem t = 0; t < a.truss->size(); ++t)
    for (Elem x = 0; x < a.size(); ++x)
      if (map[a.act(t, x)] != b.act(t, map[x])) return false;
  return true;
}

std::vector<std::vector<Elem>> all_pointed_morphisms(const PointedModule& a,
                                                     const PointedModule& b) {
  std::vector<std::vector<Elem>> out;
  for (auto& map : all_group_homs(a.group, b.group)) {
    bool ok = true;
    for (Elem t = 0; t < a.truss->size() && ok; ++t)
      for (Elem x = 0; x < a.size() && ok; ++x)
        if (map[a.act(t, x)] != b.act(t, map[x])) ok = false;
    if (ok) out.push_back(map);
  }
  return out;
}

// ---------------------------------------------------------------------------

int reduced_radius(int k) {
  int r = 1;
  while (2 * r + 1 < k) ++r;
  return r;
}

RingModuleView pointed_to_ring_module(const PointedPtr& g, const UniversalRing& rt) {
  RingModuleView view;
  view.rt = &rt;
  view.pointed = g;
  if (!rt.truss || rt.truss->empty()) {
    // R(empty) = 0 acts trivially
    const FiniteGroup grp = g->group;
    view.act = [grp](const SymElem&, Elem x) {
      (void)x;
      return grp.zero;
    };
    return view;
  }
  PointedPtr keep = g;
  const Elem o = rt.basepoint;
  const FiniteGroup grp = g->group;
  view.act = [keep, grp, o](const SymElem& r, Elem x) {
    return grp.plus(keep->act(r.g, x), grp.scalar(r.z[0] - 1, keep->act(o, x)));
  };
  // Window certification of the module laws, reduced radius for pair sweeps.
  const int rk = reduced_radius(rt.ring.car.gpart.exponent());
  auto win = rt.ring.car.window(rk);
  const i64 W = static_cast<i64>(win.size());
  const int ng = g->size();
  auto bad = parallel_find(W, [&](i64 i) {
    const SymElem& r = win[i];
    for (i64 j = 0; j < W; ++j) {
      const SymElem& s = win[j];
      SymElem prod = rt.ring.mul(r, s);
      SymElem sum = rt.ring.car.add(r, s);
      for (Elem x = 0; x < ng; ++x) {
        if (view.act(prod, x) != view.act(r, view.act(s, x))) return true;
        if (view.act(sum, x) != grp.plus(view.act(r, x), view.act(s, x))) return true;
      }
    }
    return false;
  });
  if (bad)
    throw VerificationFailure(
        Violation{"ring-module-law", {*bad}, "associativity or distributivity over R(T)"});
  for (i64 i = 0; i < W; ++i)
    for (Elem x = 0; x < ng; ++x)
      for (Elem y = 0; y < ng; ++y)
        if (view.act(win[i], grp.plus(x, y)) !=
            grp.plus(view.act(win[i], x), view.act(win[i], y)))
          throw VerificationFailure(Violation{"ring-module-additivity", {i, x, y}});
  if (rt.ring.unit && g->unital_action)
    for (Elem x = 0; x < ng; ++x)
      if (view.act(*rt.ring.unit, x) != x)
        throw VerificationFailure(Violation{"ring-module-unital", {x}});
  return view;
}

PointedPtr ring_module_to_pointed(const RingModuleView& m) {
  const UniversalRing& rt = *m.rt;
  const TrussPtr t = rt.truss;
  const int ng = m.pointed->size();
  std::vector<Elem> action(static_cast<size_t>(t->size()) * ng);
  for (Elem a = 0; a < t->size(); ++a)
    for (Elem x = 0; x < ng; ++x)
      action[static_cast<size_t>(a) * ng + x] = m.act(rt.embed(a), x);
  return validate_pointed(t, m.pointed->group, std::move(action));
}

// ---------------------------------------------------------------------------

std::vector<Elem> generated_submodule_closure(const PointedModule& g, std::vector<Elem> xs) {
  std::vector<char> in(g.size(), 0);
  std::vector<Elem> work;
  auto push = [&](Elem v) {
    if (!in[v]) {
      in[v] = 1;
      work.push_back(v);
    }
  };
  push(g.group.zero);
  for (Elem x : xs) push(x);
  for (size_t i = 0; i < work.size(); ++i) {
    Elem a = work[i];
    push(g.group.neg[a]);
    for (Elem t = 0; t < g.truss->size(); ++t) push(g.act(t, a));
    for (size_t j = 0; j <= i; ++j) push(g.group.plus(a, work[j]));
  }
  std::vector<Elem> out;
  for (Elem v = 0; v < g.size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

std::vector<Elem> generated_submodule_closed_form(const PointedModule& g, Elem x, Elem e) {
  const int k = g.group.exponent();
  std::vector<char> in(g.size(), 0);
  if (g.truss->empty()) {
    for (int m = 0; m < k; ++m) in[g.group.scalar(m, x)] = 1;
  } else {
    const Elem ex = g.act(e, x);
    for (Elem t = 0; t < g.truss->size(); ++t) {
      Elem tx = g.act(t, x);
      for (int n = 0; n < k; ++n) {
        Elem tn = g.group.plus(tx, g.group.scalar(n, ex));
        for (int m = 0; m < k; ++m) in[g.group.plus(tn, g.group.scalar(m, x))] = 1;
      }
    }
  }
  std::vector<Elem> out;
  for (Elem v = 0; v < g.size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------

FreeModule free_module_of_view(const TrussView& v, bool unital_form) {
  FreeModule f;
  f.view = v;
  f.unital_form = unital_form;
  f.car = v.car;
  const int d = v.car.zdim;
  const SymCarrier base = v.car;
  const SymFn2 vm = v.mul;
  const SymElem o = base.zero();
  if (unital_form) {
    if (!v.unit) throw HeapmodError("unital free module requires a unital truss");
    if (d >= 3) throw SizeMismatch("free module would exceed the supported Z-rank");
    f.car.zdim = d + 1;
    f.basis = *v.unit;
    f.basis.z[d] = 1;
    f.act = [base, vm, d](const SymElem& t, const SymElem& x) {
      SymElem s = x;
      i64 n = x.z[d];
      s.z[d] = 0;
      SymElem g = base.add(vm(t, s), base.scalar(n - 1, t));
      g.z[d] = n;
      return g;
    };
  } else {
    if (d >= 2) throw SizeMismatch("free module would exceed the supported Z-rank");
    f.car.zdim = d + 2;
    f.basis = o;
    f.basis.z[d] = 0;
    f.basis.z[d + 1] = 1;
    f.act = [base, vm, o, d](const SymElem& t, const SymElem& x) {
      SymElem s = x;
      i64 n = x.z[d], p = x.z[d + 1];
      s.z[d] = 0;
      s.z[d + 1] = 0;
      SymElem g = base.add(base.add(vm(t, s), base.scalar(n - 1, vm(t, o))),
                           base.scalar(p, t));
      g.z[d] = n + p;
      g.z[d + 1] = 0;
      return g;
    };
  }
  f.window_radius = f.car.default_window_radius();
  return f;
}

FreeModule free_pointed_module(const TrussPtr& t, Elem basepoint, bool unital_form) {
  if (t->empty()) {
    // F_empty(*) = Z
    FreeModule f;
    f.truss = t;
    f.car.gpart = cyclic_group(1);
    f.car.zdim = 1;
    f.basis = SymElem{0, {1, 0, 0}};
    f.unital_form = false;
    f.basepoint = -1;
    f.act = [](const SymElem&, const SymElem& x) { return x; };  // vacuous
    f.view.car = f.car;
    f.window_radius = f.car.default_window_radius();
    return f;
  }
  FreeModule f = free_module_of_view(view_of_truss(t, basepoint), unital_form);
  f.truss = t;
  f.basepoint = basepoint;
  return f;
}

FreeModule free_pointed_module(const TrussPtr& t) {
  if (t->empty()) return free_pointed_module(t, -1, false);
  return free_pointed_module(t, t->default_basepoint(), false);
}

std::optional<Violation> check_free_module(const FreeModule& f) {
  if (f.truss && f.truss->empty()) return std::nullopt;  // Z, nothing to sweep
  const SymCarrier& mc = f.car;
  const SymCarrier& tc = f.view.car;
  const int rk = reduced_radius(mc.gpart.exponent());
  auto tw = tc.window(rk);
  auto mw = mc.window(rk);
  const i64 TW = static_cast<i64>(tw.size());
  const i64 MW = static_cast<i64>(mw.size());
  // multiplicativity (ts).x = t.(s.x)
  for (i64 a = 0; a < TW; ++a)
    for (i64 b = 0; b < TW; ++b) {
      SymElem ts = f.view.mul(tw[a], tw[b]);
      for (i64 i = 0; i < MW; ++i)
        if (!(f.act(ts, mw[i]) == f.act(tw[a], f.act(tw[b], mw[i]))))
          return Violation{"free-M1", {a, b, i}};
    }
  // bracket law [t,t',t''].x = t.x - t'.x + t''.x
  for (i64 a = 0; a < TW; ++a)
    for (i64 b = 0; b < TW; ++b) {
      for (i64 c = 0; c < TW; ++c) {
        SymElem tr = tc.bracket(tw[a], tw[b], tw[c]);
        for (i64 i = 0; i < MW; ++i)
          if (!(f.act(tr, mw[i]) ==
                mc.bracket(f.act(tw[a], mw[i]), f.act(tw[b], mw[i]), f.act(tw[c], mw[i]))))
            return Violation{"free-bracket-law", {a, b, c, i}};
      }
    }
  // additivity t.(x+y) = t.x + t.y
  auto bad = parallel_find(TW * MW, [&](i64 idx) {
    const SymElem& t = tw[idx / MW];
    const SymElem& x = mw[idx % MW];
    SymElem tx = f.act(t, x);
    for (i64 j = 0; j < MW; ++j)
      if (!(f.act(t, mc.add(x, mw[j])) == mc.add(tx, f.act(t, mw[j])))) return true;
    return false;
  });
  if (bad) return Violation{"free-additivity", {*bad}};
  if (f.unital_form && f.view.unit) {
    for (i64 i = 0; i < MW; ++i)
      if (!(f.act(*f.view.unit, mw[i]) == mw[i])) return Violation{"free-unital", {i}};
  }
  return std::nullopt;
}

FreeUniversalMap universal_map(const FreeModule& f, const PointedPtr& target, Elem g) {
  if (!target->group.contains(g)) throw ElementNotInCarrier(g, target->size());
  FreeUniversalMap um;
  const FiniteGroup grp = target->group;
  PointedPtr keep = target;
  if (f.truss && f.truss->empty()) {
    um.map = [grp, g](const SymElem& x) { return grp.scalar(x.z[0], g); };
    if (um.map(f.basis) != g) throw VerificationFailure(Violation{"universal-basis", {g}});
    return um;
  }
  if (!f.truss) throw HeapmodError("universal maps require a finite source truss");
  const Elem o = f.basepoint;
  const int d = f.view.car.zdim;  // 0 for finite sources
  if (f.unital_form) {
    um.map = [grp, keep, g, d](const SymElem& x) {
      return grp.plus(keep->act(x.g, g), grp.scalar(x.z[d] - 1, g));
    };
  } else {
    const Elem og = target->act(o, g);
    um.map = [grp, keep, g, og, d](const SymElem& x) {
      return grp.plus(grp.plus(keep->act(x.g, g), grp.scalar(x.z[d] - 1, og)),
                      grp.scalar(x.z[d + 1], g));
    };
  }
  // window certification: basis value, additivity, T-linearity, uniqueness
  if (um.map(f.basis) != g) throw VerificationFailure(Violation{"universal-basis", {g}});
  const int rk = reduced_radius(f.car.gpart.exponent());
  auto mw = f.car.window(rk);
  const i64 MW = static_cast<i64>(mw.size());
  for (i64 i = 0; i < MW; ++i) {
    // uniqueness: the element decomposes through the basis, so any pointed
    // morphism agreeing on the basis agrees here
    const SymElem& x = mw[i];
    SymElem dec;
    if (f.unital_form) {
      dec = f.car.add(f.act_finite(x.g, f.basis),
                      f.car.scalar(x.z[d] - 1, f.basis));
    } else {
      dec = f.car.add(f.car.add(f.act_finite(x.g, f.basis),
                                f.car.scalar(x.z[d] - 1, f.act_finite(o, f.basis))),
                      f.car.scalar(x.z[d + 1], f.basis));
    }
    if (!(dec == x)) throw VerificationFailure(Violation{"free-decomposition", {i}});
    for (i64 j = 0; j < MW; ++j)
      if (um.map(f.car.add(x, mw[j])) != grp.plus(um.map(x), um.map(mw[j])))
        throw VerificationFailure(Violation{"universal-additivity", {i, j}});
    for (Elem t = 0; t < f.truss->size(); ++t)
      if (um.map(f.act_finite(t, x)) != target->act(t, um.map(x)))
        throw VerificationFailure(Violation{"universal-linearity", {t, i}});
  }
  return um;
}

std::vector<SymElem> FreeSum::generator(int i) const {
  std::vector<SymElem> parts(copies, base.car.zero());
  parts[i] = base.basis;
  return parts;
}

FreeSum free_pointed_module_sum(const TrussPtr& t, int copies) {
  FreeSum s;
  s.base = free_pointed_module(t);
  s.copies = copies;
  return s;
}

std::function<Elem(const std::vector<SymElem>&)> universal_map_sum(
    const FreeSum& f, const PointedPtr& target, const std::vector<Elem>& gs) {
  if (static_cast<int>(gs.size()) != f.copies) throw SizeMismatch("one target per generator");
  std::vector<FreeUniversalMap> maps;
  maps.reserve(gs.size());
  for (Elem g : gs) maps.push_back(universal_map(f.base, target, g));
  FiniteGroup grp = target->group;
  return [maps, grp](const std::vector<SymElem>& parts) {
    Elem acc = grp.zero;
    for (size_t i = 0; i < maps.size(); ++i) acc = grp.plus(acc, maps[i].map(parts[i]));
    return acc;
  };
}

SymbolicTruss coset_truss(int m, int r) {
  if (((static_cast<i64>(r) * r - r) % m) != 0)
    throw HeapmodError("coset truss needs r^2 = r (mod m)");
  SymbolicTruss t;
  t.car.gpart = cyclic_group(1);
  t.car.zdim = 1;
  const i64 mm = m, rr = r, c = (static_cast<i64>(r) * r - r) / m;
  t.mul = [mm, rr, c](const SymElem& a, const SymElem& b) {
    SymElem out;
    out.z[0] = mm * a.z[0] * b.z[0] + rr * a.z[0] + rr * b.z[0] + c;
    return out;
  };
  t.descriptor = "(" + std::to_string(m) + "z+" + std::to_string(r) + ") coset truss";
  t.window_radius = t.car.default_window_radius();
  t.name = "Z_{" + std::to_string(m) + "," + std::to_string(r) + "}";
  return t;
}

}  // namespace heapmod
