#include "heapmod/heap.hpp"

#include <algorithm>
#include <map>

namespace heapmod {

std::optional<Violation> check_heap(int n, const std::vector<Elem>& bracket) {
  if (bracket.size() != static_cast<size_t>(n) * n * n)
    return Violation{"heap-table", {}, "bracket table not total"};
  auto br = [&](Elem x, Elem y, Elem z) { return bracket[(static_cast<size_t>(x) * n + y) * n + z]; };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (!(br(x, y, z) >= 0 && br(x, y, z) < n)) return Violation{"heap-closure", {x, y, z}};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (br(a, b, b) != a) return Violation{"H2", {a, b, b}, "[a,b,b] != a"};
      if (br(b, b, a) != a) return Violation{"H2", {b, b, a}, "[b,b,a] != a"};
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (br(a, b, c) != br(c, b, a)) return Violation{"Abelian", {a, b, c}};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d)
          for (Elem e = 0; e < n; ++e)
            if (br(a, b, br(c, d, e)) != br(br(a, b, c), d, e))
              return Violation{"H1", {a, b, c, d, e}};
  return std::nullopt;
}

FiniteHeap validate_heap(int n, std::vector<Elem> bracket) {
  if (auto v = check_heap(n, bracket)) throw AxiomViolation(*v);
  FiniteHeap h;
  h.n = n;
  h.bracket = std::move(bracket);
  if (n > 0) {
    h.basepoint = 0;
    h.retract_grp = retract(h, h.basepoint);
    if (auto v = check_group(h.retract_grp)) throw AxiomViolation(*v);
    // redundancy: the stored group must reproduce the ternary table
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (h.br(x, y, z) != h.retract_grp.affine(x, y, z))
            throw AxiomViolation(Violation{"retract-agreement", {x, y, z}});
  }
  return h;
}

FiniteHeap heap_from_group(const FiniteGroup& g) {
  const int n = g.n;
  std::vector<Elem> bracket(static_cast<size_t>(n) * n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        bracket[(static_cast<size_t>(x) * n + y) * n + z] = g.affine(x, y, z);
  return validate_heap(n, std::move(bracket));
}

FiniteHeap heap_from_group_trusted(const FiniteGroup& g) {
  if (g.n <= kExhaustiveHeapCap) return heap_from_group(g);
  if (auto v = check_group(g)) throw AxiomViolation(*v);
  const int n = g.n;
  FiniteHeap h;
  h.n = n;
  h.bracket.resize(static_cast<size_t>(n) * n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        h.bracket[(static_cast<size_t>(x) * n + y) * n + z] = g.affine(x, y, z);
  h.basepoint = g.zero;
  h.retract_grp = retract(h, h.basepoint);
  return h;
}

FiniteGroup retract(const FiniteHeap& h, Elem e) {
  if (h.empty()) throw EmptyHeapError();
  if (!h.contains(e)) throw ElementNotInCarrier(e, h.n);
  FiniteGroup g;
  g.n = h.n;
  g.zero = e;
  g.add.resize(static_cast<size_t>(h.n) * h.n);
  g.neg.resize(h.n);
  for (Elem x = 0; x < h.n; ++x) {
    g.neg[x] = h.br(e, x, e);
    for (Elem y = 0; y < h.n; ++y) g.add[static_cast<size_t>(x) * h.n + y] = h.br(x, e, y);
  }
  return g;
}

std::optional<Violation> check_heap_morphism(const FiniteHeap& dom, const FiniteHeap& cod,
                                             const std::vector<Elem>& map) {
  if (map.size() != static_cast<size_t>(dom.n))
    return Violation{"morphism-total", {}, "map not total on carrier"};
  for (Elem x : map)
    if (!cod.contains(x)) return Violation{"morphism-range", {x}, "image escapes codomain"};
  for (Elem a = 0; a < dom.n; ++a)
    for (Elem b = 0; b < dom.n; ++b)
      for (Elem c = 0; c < dom.n; ++c)
        if (map[dom.br(a, b, c)] != cod.br(map[a], map[b], map[c]))
          return Violation{"heap-morphism", {a, b, c}};
  return std::nullopt;
}

MorphismDiagnostics validate_heap_morphism(const HeapMorphism& f) {
  MorphismDiagnostics d;
  d.violation = check_heap_morphism(*f.dom, *f.cod, f.map);
  d.ok = !d.violation.has_value();
  if (d.ok && !f.dom->empty()) {
    Elem e = f.dom->basepoint;
    Elem fe = f.map[e];
    FiniteGroup gd = retract(*f.dom, e);
    FiniteGroup gc = retract(*f.cod, fe);
    if (is_group_hom(gd, gc, f.map)) d.group_hom_pair = {e, fe};
  }
  return d;
}

HeapMorphism translation(const HeapPtr& h, Elem a, Elem b) {
  if (!h->contains(a)) throw ElementNotInCarrier(a, h->n);
  if (!h->contains(b)) throw ElementNotInCarrier(b, h->n);
  HeapMorphism f{h, h, {}};
  f.map.resize(h->n);
  for (Elem x = 0; x < h->n; ++x) f.map[x] = h->br(x, a, b);
  return f;
}

TranslationGroup translation_group(const HeapPtr& h) {
  TranslationGroup tg;
  tg.heap = h;
  const int n = h->n;
  std::map<std::vector<Elem>, int> index;
  // identity first, so that id 0 is the group zero even on the empty heap
  std::vector<Elem> idmap(n);
  for (Elem x = 0; x < n; ++x) idmap[x] = x;
  index[idmap] = 0;
  tg.maps.push_back(idmap);
  tg.rep.push_back({n > 0 ? 0 : -1, n > 0 ? 0 : -1});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      std::vector<Elem> m(n);
      for (Elem x = 0; x < n; ++x) m[x] = h->br(x, a, b);
      if (index.emplace(m, static_cast<int>(tg.maps.size())).second) {
        tg.maps.push_back(std::move(m));
        tg.rep.push_back({a, b});
      }
    }
  const int k = static_cast<int>(tg.maps.size());
  tg.grp.n = k;
  tg.grp.zero = 0;
  tg.grp.add.resize(static_cast<size_t>(k) * k);
  tg.grp.neg.resize(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      std::vector<Elem> comp(n);
      for (Elem x = 0; x < n; ++x) comp[x] = tg.maps[i][tg.maps[j][x]];
      auto it = index.find(comp);
      if (it == index.end())
        throw VerificationFailure(Violation{"translation-closure", {i, j}});
      tg.grp.add[static_cast<size_t>(i) * k + j] = it->second;
    }
    auto [a, b] = tg.rep[i];
    if (a < 0) {
      tg.grp.neg[i] = i;
    } else {
      std::vector<Elem> inv(n);
      for (Elem x = 0; x < n; ++x) inv[x] = h->br(x, b, a);
      tg.grp.neg[i] = index.at(inv);
    }
  }
  if (auto v = check_group(tg.grp)) throw VerificationFailure(*v);
  return tg;
}

Elem TranslationGroup::id_of(Elem a, Elem b) const {
  const int n = heap->n;
  std::vector<Elem> m(n);
  for (Elem x = 0; x < n; ++x) m[x] = heap->br(x, a, b);
  for (size_t i = 0; i < maps.size(); ++i)
    if (maps[i] == m) return static_cast<Elem>(i);
  throw VerificationFailure(Violation{"translation-lookup", {a, b}});
}

GroupHom transport(const TranslationGroup& dom, const TranslationGroup& cod,
                   const HeapMorphism& f) {
  GroupHom hom;
  hom.dom = &dom.grp;
  hom.cod = &cod.grp;
  hom.map.resize(dom.grp.n, 0);
  for (int i = 0; i < dom.grp.n; ++i) {
    auto [a, b] = dom.rep[i];
    hom.map[i] = (a < 0) ? 0 : cod.id_of(f.map[a], f.map[b]);
  }
  // well-definedness: every representative pair of the same translation must
  // land on the same target translation
  const FiniteHeap& h = *dom.heap;
  for (Elem a = 0; a < h.n; ++a)
    for (Elem b = 0; b < h.n; ++b) {
      Elem i = dom.id_of(a, b);
      if (cod.id_of(f.map[a], f.map[b]) != hom.map[i])
        throw VerificationFailure(Violation{"transport-well-defined", {a, b}});
    }
  if (!is_group_hom(dom.grp, cod.grp, hom.map))
    throw VerificationFailure(Violation{"transport-hom", {}});
  return hom;
}

PairGroupRealization pair_group_realization(const HeapPtr& h) {
  if (h->empty()) throw EmptyHeapError();
  const int n = h->n;
  PairGroupRealization pg;
  pg.class_of.assign(static_cast<size_t>(n) * n, -1);
  auto related = [&](Elem x, Elem y, Elem x2, Elem y2) { return y2 == h->br(x2, x, y); };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      size_t idx = static_cast<size_t>(x) * n + y;
      if (pg.class_of[idx] != -1) continue;
      int c = static_cast<int>(pg.rep.size());
      pg.rep.push_back({x, y});
      for (Elem x2 = 0; x2 < n; ++x2)
        for (Elem y2 = 0; y2 < n; ++y2)
          if (related(x, y, x2, y2)) pg.class_of[static_cast<size_t>(x2) * n + y2] = c;
    }
  const int k = static_cast<int>(pg.rep.size());
  pg.grp.n = k;
  pg.grp.add.resize(static_cast<size_t>(k) * k);
  pg.grp.neg.resize(k);
  pg.grp.zero = pg.class_of[0];  // class of (0,0)
  for (int i = 0; i < k; ++i) {
    auto [x, y] = pg.rep[i];
    pg.grp.neg[i] = pg.class_of[static_cast<size_t>(y) * n + x];
    for (int j = 0; j < k; ++j) {
      auto [x2, y2] = pg.rep[j];
      // semigroup product (x,y)(x',y') = (x, [y,x',y'])
      Elem py = h->br(y, x2, y2);
      pg.grp.add[static_cast<size_t>(i) * k + j] = pg.class_of[static_cast<size_t>(x) * n + py];
    }
  }
  // product must be representative-independent
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem x2 = 0; x2 < n; ++x2)
        for (Elem y2 = 0; y2 < n; ++y2) {
          int i = pg.class_of[static_cast<size_t>(x) * n + y];
          int j = pg.class_of[static_cast<size_t>(x2) * n + y2];
          Elem py = h->br(y, x2, y2);
          if (pg.grp.add[static_cast<size_t>(i) * k + j] !=
              pg.class_of[static_cast<size_t>(x) * n + py])
            throw VerificationFailure(Violation{"pair-group-product", {x, y, x2, y2}});
        }
  if (auto v = check_group(pg.grp)) throw VerificationFailure(*v);
  // tau_x^y -> class(x,y) is an anti-isomorphism from Tr(H)
  TranslationGroup tr = translation_group(h);
  if (tr.grp.n != k) throw VerificationFailure(Violation{"pair-group-size", {tr.grp.n, k}});
  pg.from_translation.resize(k);
  std::vector<char> seen(k, 0);
  for (int i = 0; i < k; ++i) {
    auto [a, b] = tr.rep[i];
    if (a < 0) a = b = 0;
    int c = pg.class_of[static_cast<size_t>(a) * n + b];
    pg.from_translation[i] = c;
    if (seen[c]) throw VerificationFailure(Violation{"pair-group-bijective", {i}});
    seen[c] = 1;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      // anti: map(i o j) = map(j) * map(i)
      int lhs = pg.from_translation[tr.grp.plus(i, j)];
      int rhs = pg.grp.plus(pg.from_translation[j], pg.from_translation[i]);
      if (lhs != rhs) throw VerificationFailure(Violation{"pair-group-anti-hom", {i, j}});
    }
  return pg;
}

bool is_subheap(const FiniteHeap& h, const std::vector<Elem>& s) {
  std::vector<char> in(h.n, 0);
  for (Elem x : s) {
    if (!h.contains(x)) return false;
    in[x] = 1;
  }
  for (Elem a : s)
    for (Elem b : s)
      for (Elem c : s)
        if (!in[h.br(a, b, c)]) return false;
  return true;
}

SubheapCongruence subheap_congruence(const HeapPtr& h, std::vector<Elem> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw NotASubheap(Violation{"subheap-empty", {}});
  std::vector<char> in(h->n, 0);
  for (Elem x : s) {
    if (!h->contains(x)) throw NotASubheap(Violation{"subheap-carrier", {x}});
    in[x] = 1;
  }
  for (Elem a : s)
    for (Elem b : s)
      for (Elem c : s)
        if (!in[h->br(a, b, c)])
          throw NotASubheap(Violation{"subheap-closure", {a, b, c}, "bracket escapes subset"});
  SubheapCongruence sc;
  sc.heap = h;
  sc.subheap = std::move(s);
  sc.class_of.assign(h->n, -1);
  auto rel = [&](Elem a, Elem b) {
    for (Elem x : sc.subheap)
      if (!in[h->br(a, b, x)]) return false;
    return true;
  };
  for (Elem a = 0; a < h->n; ++a) {
    if (sc.class_of[a] != -1) continue;
    int c = sc.num_classes++;
    for (Elem b = a; b < h->n; ++b)
      if (sc.class_of[b] == -1 && rel(a, b)) sc.class_of[b] = c;
  }
  return sc;
}

HeapQuotient heap_quotient(const HeapPtr& h, const std::vector<Elem>& s) {
  SubheapCongruence sc = subheap_congruence(h, s);
  const int k = sc.num_classes;
  std::vector<Elem> rep(k, -1);
  for (Elem x = 0; x < h->n; ++x)
    if (rep[sc.class_of[x]] == -1) rep[sc.class_of[x]] = x;
  std::vector<Elem> bracket(static_cast<size_t>(k) * k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        bracket[(static_cast<size_t>(a) * k + b) * k + c] =
            sc.class_of[h->br(rep[a], rep[b], rep[c])];
  // well-defined on classes: any member triple must land in the same class
  for (Elem a = 0; a < h->n; ++a)
    for (Elem b = 0; b < h->n; ++b)
      for (Elem c = 0; c < h->n; ++c) {
        int expect = bracket[(static_cast<size_t>(sc.class_of[a]) * k + sc.class_of[b]) * k +
                             sc.class_of[c]];
        if (sc.class_of[h->br(a, b, c)] != expect)
          throw VerificationFailure(Violation{"quotient-well-defined", {a, b, c}});
      }
  HeapQuotient q;
  q.quotient = std::make_shared<FiniteHeap>(validate_heap(k, std::move(bracket)));
  q.class_of = sc.class_of;
  q.projection = HeapMorphism{h, q.quotient, {}};
  q.projection.map.resize(h->n);
  for (Elem x = 0; x < h->n; ++x) q.projection.map[x] = sc.class_of[x];
  if (auto v = check_heap_morphism(*h, *q.quotient, q.projection.map))
    throw VerificationFailure(*v);
  return q;
}

bool is_heap_congruence(const FiniteHeap& h, const std::vector<int>& class_of) {
  for (Elem a1 = 0; a1 < h.n; ++a1)
    for (Elem b1 = 0; b1 < h.n; ++b1) {
      if (class_of[a1] != class_of[b1]) continue;
      for (Elem a2 = 0; a2 < h.n; ++a2)
        for (Elem b2 = 0; b2 < h.n; ++b2) {
          if (class_of[a2] != class_of[b2]) continue;
          for (Elem a3 = 0; a3 < h.n; ++a3)
            for (Elem b3 = 0; b3 < h.n; ++b3) {
              if (class_of[a3] != class_of[b3]) continue;
              if (class_of[h.br(a1, a2, a3)] != class_of[h.br(b1, b2, b3)]) return false;
            }
        }
    }
  return true;
}

namespace {
// Set partitions of {0..n-1} in restricted-growth form.
void partitions_rec(int n, int pos, int maxc, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (int c = 0; c <= maxc + 1; ++c) {
    cur[pos] = c;
    partitions_rec(n, pos + 1, std::max(maxc, c), cur, out);
  }
}
}  // namespace

std::vector<std::vector<int>> all_heap_congruences(const FiniteHeap& h) {
  std::vector<std::vector<int>> parts;
  if (h.n == 0) {
    parts.push_back({});
    return parts;
  }
  std::vector<int> cur(h.n, 0);
  std::vector<std::vector<int>> all;
  cur[0] = 0;
  partitions_rec(h.n, 1, 0, cur, all);
  for (auto& p : all)
    if (is_heap_congruence(h, p)) parts.push_back(p);
  return parts;
}

}  // namespace heapmod
