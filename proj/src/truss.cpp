#include "heapmod/truss.hpp"

#include <algorithm>

namespace heapmod {

std::optional<Violation> check_truss(const FiniteHeap& heap, const std::vector<Elem>& mul,
                                     std::optional<Elem> unit) {
  const int n = heap.n;
  if (mul.size() != static_cast<size_t>(n) * n)
    return Violation{"truss-table", {}, "mul table not total"};
  auto mm = [&](Elem s, Elem t) { return mul[static_cast<size_t>(s) * n + t]; };
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t)
      if (!heap.contains(mm(s, t))) return Violation{"truss-closure", {s, t}};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mm(mm(a, b), c) != mm(a, mm(b, c))) return Violation{"assoc", {a, b, c}};
  for (Elem t = 0; t < n; ++t)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          if (mm(t, heap.br(a, b, c)) != heap.br(mm(t, a), mm(t, b), mm(t, c)))
            return Violation{"T1", {t, a, b, c}};
          if (mm(heap.br(a, b, c), t) != heap.br(mm(a, t), mm(b, t), mm(c, t)))
            return Violation{"T2", {a, b, c, t}};
        }
  if (unit) {
    if (!heap.contains(*unit)) return Violation{"unit", {*unit}, "unit not in carrier"};
    for (Elem t = 0; t < n; ++t)
      if (mm(t, *unit) != t || mm(*unit, t) != t) return Violation{"unit", {t}};
  }
  return std::nullopt;
}

FiniteTruss validate_truss(FiniteHeap heap, std::vector<Elem> mul, std::optional<Elem> unit) {
  if (auto v = check_truss(heap, mul, unit)) throw AxiomViolation(*v);
  return FiniteTruss{std::move(heap), std::move(mul), unit};
}

std::optional<Violation> check_ring(const FiniteGroup& group, const std::vector<Elem>& mul,
                                    std::optional<Elem> unit) {
  const int n = group.n;
  if (mul.size() != static_cast<size_t>(n) * n)
    return Violation{"ring-table", {}, "mul table not total"};
  auto mm = [&](Elem s, Elem t) { return mul[static_cast<size_t>(s) * n + t]; };
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t)
      if (!group.contains(mm(s, t))) return Violation{"ring-closure", {s, t}};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (mm(mm(a, b), c) != mm(a, mm(b, c))) return Violation{"assoc", {a, b, c}};
        if (mm(a, group.plus(b, c)) != group.plus(mm(a, b), mm(a, c)))
          return Violation{"ldist", {a, b, c}};
        if (mm(group.plus(a, b), c) != group.plus(mm(a, c), mm(b, c)))
          return Violation{"rdist", {a, b, c}};
      }
  if (unit) {
    for (Elem t = 0; t < n; ++t)
      if (mm(t, *unit) != t || mm(*unit, t) != t) return Violation{"unit", {t}};
  }
  return std::nullopt;
}

FiniteRing validate_ring(FiniteGroup group, std::vector<Elem> mul, std::optional<Elem> unit) {
  if (auto v = check_group(group)) throw AxiomViolation(*v);
  if (auto v = check_ring(group, mul, unit)) throw AxiomViolation(*v);
  return FiniteRing{std::move(group), std::move(mul), unit};
}

FiniteTruss truss_from_ring(const FiniteRing& r) {
  return validate_truss(heap_from_group(r.group), r.mul, r.unit);
}

FiniteRing cyclic_ring(int n) {
  FiniteGroup g = cyclic_group(n);
  std::vector<Elem> mul(static_cast<size_t>(n) * n);
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t) mul[static_cast<size_t>(s) * n + t] = (s * t) % n;
  std::optional<Elem> unit;
  if (n == 1)
    unit = 0;
  else
    unit = 1;
  return validate_ring(std::move(g), std::move(mul), unit);
}

FiniteTruss residue_subtruss(int m, const std::vector<int>& residues, bool declare_unit) {
  std::vector<int> rs = residues;
  std::sort(rs.begin(), rs.end());
  const int n = static_cast<int>(rs.size());
  std::vector<int> idx(m, -1);
  for (int i = 0; i < n; ++i) idx[rs[i] % m] = i;
  auto norm = [&](long long v) {
    int r = static_cast<int>(((v % m) + m) % m);
    if (idx[r] < 0) throw NotASubheap(Violation{"residue-closure", {r}});
    return idx[r];
  };
  std::vector<Elem> bracket(static_cast<size_t>(n) * n * n);
  std::vector<Elem> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      mul[static_cast<size_t>(a) * n + b] = norm(static_cast<long long>(rs[a]) * rs[b]);
      for (int c = 0; c < n; ++c)
        bracket[(static_cast<size_t>(a) * n + b) * n + c] =
            norm(static_cast<long long>(rs[a]) - rs[b] + rs[c]);
    }
  std::optional<Elem> unit;
  if (declare_unit) {
    for (int i = 0; i < n; ++i) {
      bool ok = true;
      for (int j = 0; j < n; ++j)
        if (mul[static_cast<size_t>(i) * n + j] != j || mul[static_cast<size_t>(j) * n + i] != j)
          ok = false;
      if (ok) {
        unit = i;
        break;
      }
    }
  }
  return validate_truss(validate_heap(n, std::move(bracket)), std::move(mul), unit);
}

bool is_truss_morphism(const FiniteTruss& dom, const FiniteTruss& cod,
                       const std::vector<Elem>& map) {
  if (check_heap_morphism(dom.heap, cod.heap, map)) return false;
  for (Elem s = 0; s < dom.size(); ++s)
    for (Elem t = 0; t < dom.size(); ++t)
      if (map[dom.times(s, t)] != cod.times(map[s], map[t])) return false;
  return true;
}

std::vector<std::vector<Elem>> all_heap_morphisms(const FiniteHeap& dom, const FiniteHeap& cod) {
  std::vector<std::vector<Elem>> result;
  if (dom.n == 0) {
    result.push_back({});
    return result;
  }
  if (cod.n == 0) return result;
  // Every heap morphism is a retract-group hom followed by a translation:
  // f(x) = psi(x) computed in G(dom;e) -> G(cod;c), f(e) = c.
  const Elem e = dom.basepoint;
  FiniteGroup gd = retract(dom, e);
  for (Elem c = 0; c < cod.n; ++c) {
    FiniteGroup gc = retract(cod, c);
    for (auto& psi : all_group_homs(gd, gc)) result.push_back(psi);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<std::vector<Elem>> all_truss_morphisms(const FiniteTruss& dom,
                                                   const FiniteTruss& cod) {
  std::vector<std::vector<Elem>> result;
  for (auto& map : all_heap_morphisms(dom.heap, cod.heap)) {
    bool ok = true;
    for (Elem s = 0; s < dom.size() && ok; ++s)
      for (Elem t = 0; t < dom.size() && ok; ++t)
        if (map[dom.times(s, t)] != cod.times(map[s], map[t])) ok = false;
    if (ok) result.push_back(map);
  }
  return result;
}

}  // namespace heapmod
