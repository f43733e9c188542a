#include "heapmod/group.hpp"

#include <numeric>

namespace heapmod {

Elem FiniteGroup::scalar(i64 c, Elem x) const {
  int ord = order_of(x);
  i64 r = c % ord;
  if (r < 0) r += ord;
  Elem acc = zero;
  for (i64 i = 0; i < r; ++i) acc = plus(acc, x);
  return acc;
}

int FiniteGroup::order_of(Elem x) const {
  int ord = 1;
  Elem acc = x;
  while (acc != zero) {
    acc = plus(acc, x);
    ++ord;
  }
  return ord;
}

int FiniteGroup::exponent() const {
  i64 e = 1;
  for (Elem x = 0; x < n; ++x) e = std::lcm(e, static_cast<i64>(order_of(x)));
  return static_cast<int>(e);
}

std::vector<Elem> FiniteGroup::generators() const {
  std::vector<Elem> gens;
  std::vector<char> reached(n, 0);
  reached[zero] = 1;
  int count = 1;
  while (count < n) {
    Elem pick = -1;
    for (Elem x = 0; x < n; ++x)
      if (!reached[x]) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    // close the reached set under +pick and existing sums
    std::vector<char> next = reached;
    bool grew = true;
    while (grew) {
      grew = false;
      for (Elem x = 0; x < n; ++x) {
        if (!next[x]) continue;
        Elem y = plus(x, pick);
        if (!next[y]) {
          next[y] = 1;
          grew = true;
        }
      }
    }
    reached = next;
    count = 0;
    for (char c : reached) count += c;
  }
  return gens;
}

std::optional<Violation> check_group(const FiniteGroup& g) {
  const int n = g.n;
  if (g.add.size() != static_cast<size_t>(n) * n)
    return Violation{"group-table", {}, "add table not total"};
  if (g.neg.size() != static_cast<size_t>(n))
    return Violation{"group-table", {}, "neg table not total"};
  if (n == 0) return Violation{"group-empty", {}, "a group carrier must be non-empty"};
  if (!g.contains(g.zero)) return Violation{"group-zero", {g.zero}, "zero not in carrier"};
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!g.contains(g.plus(x, y))) return Violation{"group-closure", {x, y}};
      if (g.plus(x, y) != g.plus(y, x)) return Violation{"group-abelian", {x, y}};
    }
    if (!g.contains(g.neg[x])) return Violation{"group-closure", {x}, "neg escapes carrier"};
    if (g.plus(x, g.zero) != x) return Violation{"group-identity", {x}};
    if (g.plus(x, g.neg[x]) != g.zero) return Violation{"group-inverse", {x}};
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (g.plus(g.plus(x, y), z) != g.plus(x, g.plus(y, z)))
          return Violation{"group-assoc", {x, y, z}};
  return std::nullopt;
}

FiniteGroup validate_group(int n, std::vector<Elem> add, std::vector<Elem> neg, Elem zero) {
  FiniteGroup g{n, std::move(add), std::move(neg), zero};
  if (auto v = check_group(g)) throw AxiomViolation(*v);
  return g;
}

FiniteGroup cyclic_group(int n) {
  FiniteGroup g;
  g.n = n;
  g.zero = 0;
  g.add.resize(static_cast<size_t>(n) * n);
  g.neg.resize(n);
  for (Elem x = 0; x < n; ++x) {
    g.neg[x] = (n - x) % n;
    for (Elem y = 0; y < n; ++y) g.add[static_cast<size_t>(x) * n + y] = (x + y) % n;
  }
  return g;
}

FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.n = a.n * b.n;
  g.zero = a.zero * b.n + b.zero;
  g.add.resize(static_cast<size_t>(g.n) * g.n);
  g.neg.resize(g.n);
  for (Elem x = 0; x < g.n; ++x) {
    Elem xa = x / b.n, xb = x % b.n;
    g.neg[x] = a.neg[xa] * b.n + b.neg[xb];
    for (Elem y = 0; y < g.n; ++y) {
      Elem ya = y / b.n, yb = y % b.n;
      g.add[static_cast<size_t>(x) * g.n + y] = a.plus(xa, ya) * b.n + b.plus(xb, yb);
    }
  }
  return g;
}

bool is_group_hom(const FiniteGroup& dom, const FiniteGroup& cod, const std::vector<Elem>& map) {
  if (map.size() != static_cast<size_t>(dom.n)) return false;
  for (Elem x = 0; x < dom.n; ++x) {
    if (!cod.contains(map[x])) return false;
    for (Elem y = 0; y < dom.n; ++y)
      if (map[dom.plus(x, y)] != cod.plus(map[x], map[y])) return false;
  }
  return true;
}

std::vector<std::vector<Elem>> all_group_homs(const FiniteGroup& dom, const FiniteGroup& cod) {
  std::vector<std::vector<Elem>> result;
  std::vector<Elem> gens = dom.generators();
  const int g = static_cast<int>(gens.size());
  if (g == 0) {
    result.push_back(std::vector<Elem>(dom.n, cod.zero));
    return result;
  }
  // Decompose each element as a sum of generators once (BFS from zero).
  std::vector<std::vector<int>> coeff(dom.n, std::vector<int>(g, -1));
  coeff[dom.zero].assign(g, 0);
  std::vector<Elem> frontier{dom.zero};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier) {
      for (int i = 0; i < g; ++i) {
        Elem y = dom.plus(x, gens[i]);
        if (coeff[y][0] != -1) continue;
        coeff[y] = coeff[x];
        coeff[y][i] += 1;
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  // Try every image tuple; extend by the coefficient words and keep real homs.
  std::vector<int> idx(g, 0);
  std::vector<Elem> images(g);
  while (true) {
    for (int i = 0; i < g; ++i) images[i] = idx[i];
    std::vector<Elem> map(dom.n);
    for (Elem x = 0; x < dom.n; ++x) {
      Elem acc = cod.zero;
      for (int i = 0; i < g; ++i) acc = cod.plus(acc, cod.scalar(coeff[x][i], images[i]));
      map[x] = acc;
    }
    if (is_group_hom(dom, cod, map)) result.push_back(std::move(map));
    int k = g - 1;
    while (k >= 0 && idx[k] == cod.n - 1) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  return result;
}

std::optional<std::vector<Elem>> find_group_iso(const FiniteGroup& dom, const FiniteGroup& cod) {
  if (dom.n != cod.n) return std::nullopt;
  for (auto& map : all_group_homs(dom, cod)) {
    std::vector<char> seen(cod.n, 0);
    bool bij = true;
    for (Elem x : map) {
      if (seen[x]) {
        bij = false;
        break;
      }
      seen[x] = 1;
    }
    if (bij) return map;
  }
  return std::nullopt;
}

}  // namespace heapmod
