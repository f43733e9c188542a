#include "heapmod/iso.hpp"

namespace heapmod {

namespace {

struct Search {
  const IsoSpec& spec;
  std::vector<Elem> map;
  std::vector<char> used;

  explicit Search(const IsoSpec& s) : spec(s), map(s.n, -1), used(s.n, 0) {}

  bool consistent(Elem x) const {
    const int n = spec.n;
    // check every op instance whose arguments are all assigned and involve x
    for (auto& [ta, tb] : spec.unary) {
      Elem v = (*ta)[x];
      if (map[v] != -1 && (*tb)[map[x]] != map[v]) return false;
    }
    for (auto& [ta, tb] : spec.binary) {
      for (Elem y = 0; y < n; ++y) {
        if (map[y] == -1) continue;
        Elem v1 = (*ta)[static_cast<size_t>(x) * n + y];
        if (map[v1] != -1 &&
            (*tb)[static_cast<size_t>(map[x]) * n + map[y]] != map[v1])
          return false;
        Elem v2 = (*ta)[static_cast<size_t>(y) * n + x];
        if (map[v2] != -1 &&
            (*tb)[static_cast<size_t>(map[y]) * n + map[x]] != map[v2])
          return false;
      }
    }
    for (auto& [ta, tb] : spec.ternary) {
      for (Elem y = 0; y < n; ++y) {
        if (map[y] == -1) continue;
        for (Elem z = 0; z < n; ++z) {
          if (map[z] == -1) continue;
          const Elem tri[3][3] = {{x, y, z}, {y, x, z}, {y, z, x}};
          for (auto& t : tri) {
            Elem v = (*ta)[(static_cast<size_t>(t[0]) * n + t[1]) * n + t[2]];
            if (map[v] == -1) continue;
            Elem w = (*tb)[(static_cast<size_t>(map[t[0]]) * n + map[t[1]]) * n + map[t[2]]];
            if (w != map[v]) return false;
          }
        }
      }
    }
    return true;
  }

  bool run(Elem x) {
    const int n = spec.n;
    if (x == n) return true;
    if (map[x] != -1) return run(x + 1);
    for (Elem img = 0; img < n; ++img) {
      if (used[img]) continue;
      map[x] = img;
      used[img] = 1;
      if (consistent(x) && run(x + 1)) return true;
      map[x] = -1;
      used[img] = 0;
    }
    return false;
  }
};

bool full_check(const IsoSpec& spec, const std::vector<Elem>& map) {
  const int n = spec.n;
  std::vector<char> seen(n, 0);
  for (Elem v : map) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (auto& [ta, tb] : spec.unary)
    for (Elem x = 0; x < n; ++x)
      if (map[(*ta)[x]] != (*tb)[map[x]]) return false;
  for (auto& [ta, tb] : spec.binary)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (map[(*ta)[static_cast<size_t>(x) * n + y]] !=
            (*tb)[static_cast<size_t>(map[x]) * n + map[y]])
          return false;
  for (auto& [ta, tb] : spec.ternary)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (map[(*ta)[(static_cast<size_t>(x) * n + y) * n + z]] !=
              (*tb)[(static_cast<size_t>(map[x]) * n + map[y]) * n + map[z]])
            return false;
  for (auto& [a, b] : spec.constants)
    if (map[a] != b) return false;
  for (auto& [a, b] : spec.pinned)
    if (map[a] != b) return false;
  return true;
}

}  // namespace

std::optional<std::vector<Elem>> iso_search(const IsoSpec& spec) {
  if (spec.n == 0) return std::vector<Elem>{};
  Search s(spec);
  for (auto& [a, b] : spec.constants) {
    if (s.map[a] != -1 && s.map[a] != b) return std::nullopt;
    if (s.map[a] == -1) {
      if (s.used[b]) return std::nullopt;
      s.map[a] = b;
      s.used[b] = 1;
    }
  }
  for (auto& [a, b] : spec.pinned) {
    if (s.map[a] != -1 && s.map[a] != b) return std::nullopt;
    if (s.map[a] == -1) {
      if (s.used[b]) return std::nullopt;
      s.map[a] = b;
      s.used[b] = 1;
    }
  }
  if (!s.run(0)) return std::nullopt;
  if (!full_check(spec, s.map))
    throw VerificationFailure(Violation{"iso-soundness", {}, "candidate failed revalidation"});
  return s.map;
}

std::optional<std::vector<Elem>> iso_search_heaps(const FiniteHeap& a, const FiniteHeap& b) {
  if (a.n != b.n) throw SizeMismatch("heap carriers differ");
  IsoSpec spec;
  spec.n = a.n;
  spec.ternary.push_back({&a.bracket, &b.bracket});
  return iso_search(spec);
}

std::optional<std::vector<Elem>> iso_search_groups(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.n != b.n) throw SizeMismatch("group carriers differ");
  IsoSpec spec;
  spec.n = a.n;
  spec.binary.push_back({&a.add, &b.add});
  spec.unary.push_back({&a.neg, &b.neg});
  spec.constants.push_back({a.zero, b.zero});
  return iso_search(spec);
}

std::optional<std::vector<Elem>> iso_search_trusses(const FiniteTruss& a, const FiniteTruss& b) {
  if (a.size() != b.size()) throw SizeMismatch("truss carriers differ");
  IsoSpec spec;
  spec.n = a.size();
  spec.ternary.push_back({&a.heap.bracket, &b.heap.bracket});
  spec.binary.push_back({&a.mul, &b.mul});
  if (a.unit && b.unit) spec.constants.push_back({*a.unit, *b.unit});
  return iso_search(spec);
}

std::optional<std::vector<Elem>> iso_search_rings(const FiniteRing& a, const FiniteRing& b) {
  if (a.size() != b.size()) throw SizeMismatch("ring carriers differ");
  IsoSpec spec;
  spec.n = a.size();
  spec.binary.push_back({&a.group.add, &b.group.add});
  spec.binary.push_back({&a.mul, &b.mul});
  spec.unary.push_back({&a.group.neg, &b.group.neg});
  spec.constants.push_back({a.group.zero, b.group.zero});
  if (a.unit && b.unit) spec.constants.push_back({*a.unit, *b.unit});
  return iso_search(spec);
}

std::optional<std::vector<Elem>> iso_search_homs(
    const HeapOfModules& a, const HeapOfModules& b,
    const std::vector<std::pair<Elem, Elem>>& pinned) {
  if (a.size() != b.size()) throw SizeMismatch("carriers differ");
  if (a.truss->size() != b.truss->size()) throw SizeMismatch("truss mismatch");
  IsoSpec spec;
  spec.n = a.size();
  spec.ternary.push_back({&a.heap.bracket, &b.heap.bracket});
  // one ternary table per truss element: slices of the taction
  std::vector<std::vector<Elem>> asl(a.truss->size()), bsl(a.truss->size());
  const int n = a.size();
  for (Elem t = 0; t < a.truss->size(); ++t) {
    asl[t].resize(static_cast<size_t>(n) * n * n);
    bsl[t].resize(static_cast<size_t>(n) * n * n);
    for (Elem m = 0; m < n; ++m)
      for (Elem x = 0; x < n; ++x)
        for (Elem z = 0; z < n; ++z) {
          // embed the binary slice as a ternary table constant in z
          asl[t][(static_cast<size_t>(m) * n + x) * n + z] = a.act(t, m, x);
          bsl[t][(static_cast<size_t>(m) * n + x) * n + z] = b.act(t, m, x);
        }
  }
  spec.pinned = pinned;
  for (Elem t = 0; t < a.truss->size(); ++t) spec.ternary.push_back({&asl[t], &bsl[t]});
  return iso_search(spec);
}

}  // namespace heapmod
