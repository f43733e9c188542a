#include "heapmod/fixtures.hpp"

#include <random>

namespace heapmod {

namespace {

HeapPtr make_heap(FiniteHeap h) { return std::make_shared<FiniteHeap>(std::move(h)); }
TrussPtr make_truss(FiniteTruss t) { return std::make_shared<FiniteTruss>(std::move(t)); }
RingPtr make_ring(FiniteRing r) { return std::make_shared<FiniteRing>(std::move(r)); }

// Heap on {0..3} that is H(Z4) relabelled by the swap 0<->1.
FiniteHeap h4_swapped() {
  auto sigma = [](Elem x) { return x == 0 ? 1 : x == 1 ? 0 : x; };
  std::vector<Elem> bracket(64);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      for (Elem c = 0; c < 4; ++c)
        bracket[(static_cast<size_t>(a) * 4 + b) * 4 + c] =
            sigma(((sigma(a) - sigma(b) + sigma(c)) % 4 + 4) % 4);
  return validate_heap(4, std::move(bracket));
}

// Upper triangular 2x2 matrices over Z2: a noncommutative unital ring with 8
// elements, encoded as bits (a | b<<1 | d<<2) for [[a,b],[0,d]].
FiniteRing ut2_z2() {
  const int n = 8;
  auto A = [](Elem x) { return x & 1; };
  auto B = [](Elem x) { return (x >> 1) & 1; };
  auto D = [](Elem x) { return (x >> 2) & 1; };
  auto enc = [](int a, int b, int d) { return (a & 1) | ((b & 1) << 1) | ((d & 1) << 2); };
  FiniteGroup g;
  g.n = n;
  g.zero = 0;
  g.add.resize(64);
  g.neg.resize(8);
  for (Elem x = 0; x < n; ++x) {
    g.neg[x] = x;  // characteristic 2
    for (Elem y = 0; y < n; ++y)
      g.add[static_cast<size_t>(x) * n + y] =
          enc(A(x) ^ A(y), B(x) ^ B(y), D(x) ^ D(y));
  }
  std::vector<Elem> mul(64);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      mul[static_cast<size_t>(x) * n + y] =
          enc(A(x) & A(y), (A(x) & B(y)) ^ (B(x) & D(y)), D(x) & D(y));
  return validate_ring(std::move(g), std::move(mul), enc(1, 0, 1));
}

// The zero-multiplication rng on Z2.
FiniteRing z2_zero_rng() {
  FiniteGroup g = cyclic_group(2);
  std::vector<Elem> mul(4, 0);
  return validate_ring(std::move(g), std::move(mul), std::nullopt);
}

FiniteRing zero_ring_fixture() {
  FiniteGroup g = cyclic_group(1);
  return validate_ring(std::move(g), {0}, 0);
}

ModulePtr module_by_residue_mult(const TrussPtr& t, const std::vector<int>& truss_residues,
                                 int mod) {
  // module Z_mod over a residue truss, action = integer multiplication
  FiniteHeap heap = heap_from_group(cyclic_group(mod));
  std::vector<Elem> action(static_cast<size_t>(t->size()) * mod);
  for (Elem a = 0; a < t->size(); ++a)
    for (Elem m = 0; m < mod; ++m)
      action[static_cast<size_t>(a) * mod + m] =
          static_cast<Elem>((static_cast<long long>(truss_residues[a]) * m) % mod);
  return validate_module(t, std::move(heap), std::move(action));
}

PointedPtr pointed_by_residue_mult(const TrussPtr& t, const std::vector<int>& truss_residues,
                                   int mod) {
  FiniteGroup grp = cyclic_group(mod);
  std::vector<Elem> action(static_cast<size_t>(t->size()) * mod);
  for (Elem a = 0; a < t->size(); ++a)
    for (Elem g = 0; g < mod; ++g)
      action[static_cast<size_t>(a) * mod + g] = static_cast<Elem>(
          (static_cast<long long>(truss_residues[a]) * g) % mod);
  return validate_pointed(t, std::move(grp), std::move(action));
}

Corpus build_corpus() {
  Corpus c;

  // --- heaps ---------------------------------------------------------------
  c.heaps.push_back({"E", make_heap(validate_heap(0, {}))});
  c.heaps.push_back({"P1", make_heap(heap_from_group(cyclic_group(1)))});
  c.heaps.push_back({"H2", make_heap(heap_from_group(cyclic_group(2)))});
  c.heaps.push_back({"H3", make_heap(heap_from_group(cyclic_group(3)))});
  c.heaps.push_back({"H4", make_heap(heap_from_group(cyclic_group(4)))});
  c.heaps.push_back({"H5", make_heap(heap_from_group(cyclic_group(5)))});
  c.heaps.push_back({"H6", make_heap(heap_from_group(cyclic_group(6)))});
  c.heaps.push_back(
      {"H22", make_heap(heap_from_group(product_group(cyclic_group(2), cyclic_group(2))))});
  c.heaps.push_back({"H8", make_heap(heap_from_group(cyclic_group(8)))});
  c.heaps.push_back({"H12", make_heap(heap_from_group(cyclic_group(12)))});
  c.heaps.push_back({"H4s", make_heap(h4_swapped())});

  // --- rings ---------------------------------------------------------------
  c.rings.push_back({"R0", make_ring(zero_ring_fixture())});
  for (int n : {2, 3, 4, 6, 12})
    c.rings.push_back({"RZ" + std::to_string(n), make_ring(cyclic_ring(n))});
  c.rings.push_back({"RZ2zero", make_ring(z2_zero_rng())});
  c.rings.push_back({"RUT2", make_ring(ut2_z2())});

  // --- trusses -------------------------------------------------------------
  c.trusses.push_back({"TE", make_truss(validate_truss(validate_heap(0, {}), {}, std::nullopt))});
  c.trusses.push_back({"T1", make_truss(truss_from_ring(*c.ring("R0")))});
  for (int n : {2, 3, 4, 6, 12})
    c.trusses.push_back(
        {"TZ" + std::to_string(n), make_truss(truss_from_ring(cyclic_ring(n)))});
  c.trusses.push_back({"T39", make_truss(residue_subtruss(12, {3, 9}, false))});
  c.trusses.push_back({"TOdd8", make_truss(residue_subtruss(8, {1, 3, 5, 7}, true))});
  c.trusses.push_back({"TZ2zero", make_truss(truss_from_ring(z2_zero_rng()))});
  c.trusses.push_back({"TUT2", make_truss(truss_from_ring(ut2_z2()))});

  const TrussPtr tz4 = c.truss("TZ4");
  const TrussPtr tz12 = c.truss("TZ12");
  const TrussPtr t39 = c.truss("T39");
  const TrussPtr todd8 = c.truss("TOdd8");
  const TrussPtr te = c.truss("TE");

  // --- truss modules -------------------------------------------------------
  c.modules.push_back({"M_Z4_TZ4", module_by_residue_mult(tz4, {0, 1, 2, 3}, 4)});
  c.modules.push_back({"M_Z12_T39", module_by_residue_mult(t39, {3, 9}, 12)});
  {
    // constant action t.m := 2 on H4 over TZ4
    FiniteHeap h = heap_from_group(cyclic_group(4));
    std::vector<Elem> action(16, 2);
    c.modules.push_back({"M_const2_TZ4", validate_module(tz4, std::move(h), std::move(action))});
  }
  {
    // Z2 over TZ4 through reduction mod 2
    FiniteHeap h = heap_from_group(cyclic_group(2));
    std::vector<Elem> action(8);
    for (Elem a = 0; a < 4; ++a)
      for (Elem m = 0; m < 2; ++m) action[static_cast<size_t>(a) * 2 + m] = (a * m) % 2;
    c.modules.push_back({"M_Z2_TZ4", validate_module(tz4, std::move(h), std::move(action))});
  }
  {
    // singleton over TZ12
    FiniteHeap h = heap_from_group(cyclic_group(1));
    std::vector<Elem> action(12, 0);
    c.modules.push_back({"M_P1_TZ12", validate_module(tz12, std::move(h), std::move(action))});
  }
  {
    // Z4 over TZ12 through reduction mod 4
    FiniteHeap h = heap_from_group(cyclic_group(4));
    std::vector<Elem> action(48);
    for (Elem a = 0; a < 12; ++a)
      for (Elem m = 0; m < 4; ++m) action[static_cast<size_t>(a) * 4 + m] = (a * m) % 4;
    c.modules.push_back({"M_Z4_TZ12", validate_module(tz12, std::move(h), std::move(action))});
  }

  // --- pointed modules -----------------------------------------------------
  c.pointeds.push_back({"P_Z4_TZ4", pointed_by_residue_mult(tz4, {0, 1, 2, 3}, 4)});
  {
    // identity action of T39 on Z2 (both residues are odd)
    FiniteGroup g = cyclic_group(2);
    std::vector<Elem> action = {0, 1, 0, 1};
    c.pointeds.push_back({"P_Z2_T39", validate_pointed(t39, std::move(g), std::move(action))});
  }
  {
    FiniteGroup g = cyclic_group(2);
    std::vector<Elem> action(8);
    for (Elem a = 0; a < 4; ++a)
      for (Elem x = 0; x < 2; ++x) action[static_cast<size_t>(a) * 2 + x] = (a * x) % 2;
    c.pointeds.push_back({"P_Z2_TZ4", validate_pointed(tz4, std::move(g), std::move(action))});
  }
  {
    // even residues mod 8 (a Z4 group) over the odd residues truss
    FiniteGroup g = cyclic_group(4);  // id k <-> residue 2k
    std::vector<int> odd = {1, 3, 5, 7};
    std::vector<Elem> action(16);
    for (Elem a = 0; a < 4; ++a)
      for (Elem k = 0; k < 4; ++k)
        action[static_cast<size_t>(a) * 4 + k] = (odd[a] * 2 * k) % 8 / 2;
    c.pointeds.push_back({"P_Even8_TOdd8", validate_pointed(todd8, std::move(g), std::move(action))});
  }
  {
    // zero action on Z4 over TZ4
    FiniteGroup g = cyclic_group(4);
    std::vector<Elem> action(16, 0);
    c.pointeds.push_back({"P_zero_Z4_TZ4", validate_pointed(tz4, std::move(g), std::move(action))});
  }
  {
    // Z3 over TZ3 by ring multiplication
    TrussPtr tz3 = c.truss("TZ3");
    FiniteGroup g = cyclic_group(3);
    std::vector<Elem> action(9);
    for (Elem a = 0; a < 3; ++a)
      for (Elem x = 0; x < 3; ++x) action[static_cast<size_t>(a) * 3 + x] = (a * x) % 3;
    c.pointeds.push_back({"P_Z3_TZ3", validate_pointed(tz3, std::move(g), std::move(action))});
  }
  {
    // Z4 over TZ12 through reduction (for the ring-module transfer checks)
    FiniteGroup g = cyclic_group(4);
    std::vector<Elem> action(48);
    for (Elem a = 0; a < 12; ++a)
      for (Elem x = 0; x < 4; ++x) action[static_cast<size_t>(a) * 4 + x] = (a * x) % 4;
    c.pointeds.push_back({"P_Z4_TZ12", validate_pointed(tz12, std::move(g), std::move(action))});
  }
  {
    // abelian group as a pointed module over the empty truss
    FiniteGroup g = cyclic_group(2);
    c.pointeds.push_back({"P_Z2_TE", validate_pointed(te, std::move(g), {})});
  }

  // --- heaps of modules ----------------------------------------------------
  c.homs.push_back({"HM_Z4_TZ4", hom_from_module(c.module("M_Z4_TZ4"))});
  c.homs.push_back({"HM_Z2_TZ4", functor_H(c.pointed("P_Z2_TZ4"))});
  c.homs.push_back({"HM_Z12_T39", hom_from_module(c.module("M_Z12_T39"))});
  c.homs.push_back({"HM_Z2_T39", functor_H(c.pointed("P_Z2_T39"))});
  c.homs.push_back({"HM_abs_TZ4", hom_from_module(c.module("M_const2_TZ4"))});
  c.homs.push_back({"HM_star_TZ4", star_hom(tz4)});
  c.homs.push_back({"HM_star_T39", star_hom(t39)});
  c.homs.push_back({"HM_empty_TZ4", empty_hom(tz4)});
  c.homs.push_back({"HM_Even8_TOdd8", functor_H(c.pointed("P_Even8_TOdd8"))});
  c.homs.push_back({"HM_H2_TE", functor_H(c.pointed("P_Z2_TE"))});

  return c;
}

template <class V>
auto find_named(const V& v, const std::string& name) -> decltype(v.front().second) {
  for (auto& [n, value] : v)
    if (n == name) return value;
  throw HeapmodError("unknown fixture: " + name);
}

}  // namespace

HeapPtr Corpus::heap(const std::string& name) const { return find_named(heaps, name); }
TrussPtr Corpus::truss(const std::string& name) const { return find_named(trusses, name); }
RingPtr Corpus::ring(const std::string& name) const { return find_named(rings, name); }
ModulePtr Corpus::module(const std::string& name) const { return find_named(modules, name); }
PointedPtr Corpus::pointed(const std::string& name) const { return find_named(pointeds, name); }
HomPtr Corpus::hom(const std::string& name) const { return find_named(homs, name); }

const Corpus& corpus() {
  static const Corpus c = build_corpus();
  return c;
}

namespace {

unsigned name_seed(const std::string& name, unsigned seed) {
  unsigned h = seed;
  for (char ch : name) h = h * 131u + static_cast<unsigned char>(ch);
  return h;
}

// Change one random entry of `table` (range [0, range)) to a different value;
// re-draw until `reject` confirms invalidity. Degenerate fixtures fall back to
// an out-of-carrier entry (non-empty) or a non-total table (empty).
template <class Reject>
std::pair<std::vector<Elem>, Violation> mutate_table(std::vector<Elem> table, int range,
                                                     unsigned seed, Reject reject) {
  std::mt19937 rng(seed);
  if (table.empty()) {
    std::vector<Elem> copy = {0};
    if (auto v = reject(copy)) return {std::move(copy), *v};
    throw HeapmodError("spurious entry accepted on an empty table");
  }
  if (range < 2) {
    std::vector<Elem> copy = table;
    copy[rng() % copy.size()] = range;  // escapes the carrier
    if (auto v = reject(copy)) return {std::move(copy), *v};
    throw HeapmodError("out-of-carrier entry accepted");
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Elem> copy = table;
    size_t pos = rng() % copy.size();
    Elem delta = 1 + static_cast<Elem>(rng() % (range - 1));
    copy[pos] = (copy[pos] + delta) % range;
    if (auto v = reject(copy)) return {std::move(copy), *v};
  }
  throw HeapmodError("no invalid mutant found (unexpectedly homogeneous table)");
}

}  // namespace

HeapMutant mutate_heap(const std::string& name, const FiniteHeap& h, unsigned seed) {
  auto [table, viol] = mutate_table(
      h.bracket, h.n, name_seed(name, seed),
      [&](const std::vector<Elem>& t) { return check_heap(h.n, t); });
  return HeapMutant{h.n, std::move(table), std::move(viol)};
}

TrussMutant mutate_truss(const std::string& name, const FiniteTruss& t, unsigned seed) {
  auto [table, viol] = mutate_table(
      t.mul, t.size(), name_seed(name, seed),
      [&](const std::vector<Elem>& m) { return check_truss(t.heap, m, t.unit); });
  return TrussMutant{t.heap, std::move(table), t.unit, std::move(viol)};
}

ModuleMutant mutate_module(const std::string& name, const TrussModule& m, unsigned seed) {
  auto [table, viol] = mutate_table(
      m.action, m.heap.n, name_seed(name, seed),
      [&](const std::vector<Elem>& a) { return check_module(*m.truss, m.heap, a); });
  return ModuleMutant{m.truss, m.heap, std::move(table), std::move(viol)};
}

PointedMutant mutate_pointed(const std::string& name, const PointedModule& p, unsigned seed) {
  auto [table, viol] = mutate_table(
      p.action, p.group.n, name_seed(name, seed),
      [&](const std::vector<Elem>& a) { return check_pointed(*p.truss, p.group, a); });
  return PointedMutant{p.truss, p.group, std::move(table), std::move(viol)};
}

HomMutant mutate_hom(const std::string& name, const HeapOfModules& h, unsigned seed) {
  auto [table, viol] = mutate_table(
      h.taction, h.size(), name_seed(name, seed),
      [&](const std::vector<Elem>& t) { return check_hom(*h.truss, h.heap, t); });
  return HomMutant{h.truss, h.heap, std::move(table), std::move(viol)};
}

}  // namespace heapmod
