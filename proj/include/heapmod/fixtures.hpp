// The shipped fixture corpus: validated structures used by the test and
// acceptance suites, plus the seeded negative corpus (one guaranteed-invalid
// mutant per fixture).
#pragma once

#include "heapmod/hom.hpp"

namespace heapmod {

struct Corpus {
  std::vector<std::pair<std::string, HeapPtr>> heaps;
  std::vector<std::pair<std::string, TrussPtr>> trusses;
  std::vector<std::pair<std::string, RingPtr>> rings;
  std::vector<std::pair<std::string, ModulePtr>> modules;
  std::vector<std::pair<std::string, PointedPtr>> pointeds;
  std::vector<std::pair<std::string, HomPtr>> homs;

  HeapPtr heap(const std::string& name) const;
  TrussPtr truss(const std::string& name) const;
  RingPtr ring(const std::string& name) const;
  ModulePtr module(const std::string& name) const;
  PointedPtr pointed(const std::string& name) const;
  HomPtr hom(const std::string& name) const;
};

// Built once; every structure passes exhaustive validation on construction.
const Corpus& corpus();

constexpr unsigned kMutationSeed = 0x5eed;

// One invalid mutant: a single table entry changed (re-drawn deterministically
// until validation rejects). Returns the raw tables plus the violation found.
struct HeapMutant {
  int n;
  std::vector<Elem> bracket;
  Violation violation;
};
struct TrussMutant {
  FiniteHeap heap;
  std::vector<Elem> mul;
  std::optional<Elem> unit;
  Violation violation;
};
struct ModuleMutant {
  TrussPtr truss;
  FiniteHeap heap;
  std::vector<Elem> action;
  Violation violation;
};
struct PointedMutant {
  TrussPtr truss;
  FiniteGroup group;
  std::vector<Elem> action;
  Violation violation;
};
struct HomMutant {
  TrussPtr truss;
  FiniteHeap heap;
  std::vector<Elem> taction;
  Violation violation;
};

HeapMutant mutate_heap(const std::string& name, const FiniteHeap& h, unsigned seed);
TrussMutant mutate_truss(const std::string& name, const FiniteTruss& t, unsigned seed);
ModuleMutant mutate_module(const std::string& name, const TrussModule& m, unsigned seed);
PointedMutant mutate_pointed(const std::string& name, const PointedModule& p, unsigned seed);
HomMutant mutate_hom(const std::string& name, const HeapOfModules& h, unsigned seed);

}  // namespace heapmod
