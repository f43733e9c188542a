// The structure-definition text format: line-oriented declarations with
// explicit operation tables, a total-or-error parser with line/column
// diagnostics, and the canonical printer.
#pragma once

#include "heapmod/category.hpp"
#include "heapmod/fixtures.hpp"

namespace heapmod {

struct SyntaxError : HeapmodError {
  int line, col;
  SyntaxError(int line_, int col_, const std::string& msg)
      : HeapmodError("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                     ": " + msg),
        line(line_),
        col(col_) {}
};

struct UnresolvedReference : HeapmodError {
  explicit UnresolvedReference(const std::string& what)
      : HeapmodError("unresolved reference: " + what) {}
};

struct TableNotTotal : HeapmodError {
  explicit TableNotTotal(const std::string& what)
      : HeapmodError("table not total: " + what) {}
};

enum class DeclKind { Heap, Group, Ring, Truss, Module, Pointed, Hom, Morphism, Fork, Sequence };

enum class MorphKind { Heap, Hom, Module, Pointed, Truss };

struct MorphismDecl {
  MorphKind kind = MorphKind::Heap;
  std::string dom, cod;
  std::vector<Elem> map;
};

struct Decl {
  DeclKind kind;
  std::string name;
  std::vector<std::string> symbols;  // carrier names, in id order

  HeapPtr heap;
  std::shared_ptr<const FiniteGroup> group;
  RingPtr ring;
  TrussPtr truss;
  ModulePtr module;
  PointedPtr pointed;
  HomPtr hom;
  std::string truss_ref;  // for module/pointed/hom

  MorphismDecl morphism;
  std::vector<std::string> refs;  // fork: {f,g,h}; sequence: morphism names
};

struct StructureFile {
  std::vector<Decl> decls;

  const Decl* find(const std::string& name) const;
  const Decl& get(const std::string& name) const;
  HomPtr hom(const std::string& name) const;
  TrussPtr truss(const std::string& name) const;
  // a morphism declared with kind hom, materialized
  HomMorphism hom_morphism(const std::string& name) const;
};

// Parses and materializes (validation errors surface with the declaration
// name attached). Throws SyntaxError / UnresolvedReference / TableNotTotal /
// AxiomViolation.
StructureFile parse_structure_file(const std::string& text);

// Canonical emission; parse(print(f)) reproduces every declaration.
std::string print_structure_file(const StructureFile& f);

// The shipped corpus as a structure file (the source of data/fixtures.heap).
StructureFile shipped_fixtures_file();

bool same_structure_file(const StructureFile& a, const StructureFile& b);

}  // namespace heapmod
