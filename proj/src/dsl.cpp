#include "heapmod/dsl.hpp"

#include <map>
#include <sstream>

namespace heapmod {

namespace {

struct Tok {
  std::string text;
  int line, col;
};

struct Lines {
  std::vector<std::vector<Tok>> rows;  // token rows, comments stripped
};

Lines tokenize(const std::string& text) {
  Lines out;
  int line = 1;
  std::vector<Tok> row;
  std::string cur;
  int col = 1, curcol = 1;
  auto flush_tok = [&]() {
    if (!cur.empty()) {
      row.push_back({cur, line, curcol});
      cur.clear();
    }
  };
  auto flush_row = [&]() {
    flush_tok();
    if (!row.empty()) out.rows.push_back(std::move(row));
    row.clear();
  };
  bool comment = false;
  for (char ch : text) {
    if (ch == '\n') {
      flush_row();
      ++line;
      col = 1;
      comment = false;
      continue;
    }
    if (comment) {
      ++col;
      continue;
    }
    if (ch == '#') {
      comment = true;
      ++col;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      flush_tok();
    } else if (ch == '{' || ch == '}' || ch == '=') {
      flush_tok();
      row.push_back({std::string(1, ch), line, col});
    } else {
      if (cur.empty()) curcol = col;
      cur.push_back(ch);
    }
    ++col;
  }
  flush_row();
  return out;
}

struct Parser {
  const Lines& lines;
  size_t pos = 0;

  explicit Parser(const Lines& l) : lines(l) {}

  bool done() const { return pos >= lines.rows.size(); }
  const std::vector<Tok>& peek() const { return lines.rows[pos]; }
  std::vector<Tok> next() { return lines.rows[pos++]; }

  [[noreturn]] void fail(const Tok& t, const std::string& msg) const {
    throw SyntaxError(t.line, t.col, msg + " (near '" + t.text + "')");
  }
};

struct RawTable {
  int arity;
  std::vector<std::vector<std::string>> rows;  // arity symbols then the value symbol
  int line = 0;
};

struct RawDecl {
  std::string kind, name;
  std::vector<std::string> carrier;
  std::map<std::string, std::string> attrs;  // zero/unit/truss/kind/dom/cod/basepoint
  std::map<std::string, RawTable> tables;    // bracket/add/neg/mul/action/taction/map
  std::vector<std::string> refs;             // fork / sequence members
  int line = 0;
  bool saw_carrier = false;
};

int table_arity(const std::string& name) {
  if (name == "bracket") return 3;
  if (name == "taction") return 3;
  if (name == "add" || name == "mul" || name == "action") return 2;
  if (name == "neg" || name == "map") return 1;
  return -1;
}

RawDecl parse_decl(Parser& p) {
  RawDecl d;
  auto header = p.next();
  d.kind = header[0].text;
  d.line = header[0].line;
  if (header.size() != 3 || header[2].text != "{")
    p.fail(header[0], "expected '<kind> <name> {'");
  d.name = header[1].text;
  while (true) {
    if (p.done()) throw SyntaxError(d.line, 1, "unterminated declaration " + d.name);
    auto row = p.next();
    if (row[0].text == "}") {
      if (row.size() != 1) p.fail(row[1], "trailing tokens after '}'");
      break;
    }
    const std::string& key = row[0].text;
    if (key == "carrier") {
      d.saw_carrier = true;
      for (size_t i = 1; i < row.size(); ++i) d.carrier.push_back(row[i].text);
    } else if (key == "members") {
      for (size_t i = 1; i < row.size(); ++i) d.refs.push_back(row[i].text);
    } else if (table_arity(key) > 0) {
      if (row.size() != 2 || row[1].text != "{") p.fail(row[0], "expected '" + key + " {'");
      RawTable t;
      t.arity = table_arity(key);
      t.line = row[0].line;
      while (true) {
        if (p.done()) throw SyntaxError(t.line, 1, "unterminated table " + key);
        auto trow = p.next();
        if (trow[0].text == "}") break;
        if (static_cast<int>(trow.size()) != t.arity + 2 ||
            trow[t.arity].text != "=")
          p.fail(trow[0], "expected '" + std::string(t.arity, 'x') + " = r' row");
        std::vector<std::string> syms;
        for (int i = 0; i < t.arity; ++i) syms.push_back(trow[i].text);
        syms.push_back(trow[t.arity + 1].text);
        t.rows.push_back(std::move(syms));
      }
      if (d.tables.count(key)) p.fail(row[0], "duplicate table '" + key + "'");
      d.tables[key] = std::move(t);
    } else if (row.size() == 2) {
      d.attrs[key] = row[1].text;
    } else {
      p.fail(row[0], "unknown entry in declaration");
    }
  }
  return d;
}

struct SymbolTable {
  std::map<std::string, Elem> ids;
  Elem resolve(const std::string& s, const std::string& ctx) const {
    auto it = ids.find(s);
    if (it == ids.end()) throw UnresolvedReference(ctx + ": symbol '" + s + "'");
    return it->second;
  }
};

SymbolTable symbols_of(const std::vector<std::string>& carrier, const std::string& ctx) {
  SymbolTable st;
  for (size_t i = 0; i < carrier.size(); ++i) {
    if (!st.ids.emplace(carrier[i], static_cast<Elem>(i)).second)
      throw UnresolvedReference(ctx + ": duplicate carrier symbol '" + carrier[i] + "'");
  }
  return st;
}

// Materializes a table of the given shape into a dense vector; every cell must
// be set exactly once.
std::vector<Elem> dense_table(const RawDecl& d, const std::string& key,
                              const std::vector<const SymbolTable*>& arg_syms,
                              const SymbolTable& val_syms, const std::vector<int>& dims) {
  auto it = d.tables.find(key);
  size_t total = 1;
  for (int n : dims) total *= static_cast<size_t>(n);
  if (it == d.tables.end()) {
    if (total == 0) return {};
    throw TableNotTotal(d.name + ": missing table '" + key + "'");
  }
  const RawTable& t = it->second;
  std::vector<Elem> out(total, -1);
  const std::string ctx = d.name + "." + key;
  for (auto& row : t.rows) {
    size_t idx = 0;
    for (size_t i = 0; i < dims.size(); ++i)
      idx = idx * dims[i] + arg_syms[i]->resolve(row[i], ctx);
    if (out[idx] != -1) throw TableNotTotal(ctx + ": duplicate row");
    out[idx] = val_syms.resolve(row.back(), ctx);
  }
  for (Elem v : out)
    if (v == -1) throw TableNotTotal(ctx + ": missing rows");
  return out;
}

}  // namespace

const Decl* StructureFile::find(const std::string& name) const {
  for (auto& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

const Decl& StructureFile::get(const std::string& name) const {
  const Decl* d = find(name);
  if (!d) throw UnresolvedReference(name);
  return *d;
}

HomPtr StructureFile::hom(const std::string& name) const {
  const Decl& d = get(name);
  if (!d.hom) throw UnresolvedReference(name + " is not a heap of modules");
  return d.hom;
}

TrussPtr StructureFile::truss(const std::string& name) const {
  const Decl& d = get(name);
  if (!d.truss) throw UnresolvedReference(name + " is not a truss");
  return d.truss;
}

HomMorphism StructureFile::hom_morphism(const std::string& name) const {
  const Decl& d = get(name);
  if (d.kind != DeclKind::Morphism || d.morphism.kind != MorphKind::Hom)
    throw UnresolvedReference(name + " is not a hom morphism");
  return HomMorphism{hom(d.morphism.dom), hom(d.morphism.cod), d.morphism.map};
}

StructureFile parse_structure_file(const std::string& text) {
  Lines lines = tokenize(text);
  Parser p(lines);
  StructureFile f;
  while (!p.done()) {
    RawDecl raw = parse_decl(p);
    Decl d;
    d.name = raw.name;
    d.symbols = raw.carrier;
    if (f.find(raw.name))
      throw UnresolvedReference("duplicate declaration name '" + raw.name + "'");
    SymbolTable st = symbols_of(raw.carrier, raw.name);
    const int n = static_cast<int>(raw.carrier.size());
    auto attr = [&](const std::string& key) -> std::optional<std::string> {
      auto it = raw.attrs.find(key);
      if (it == raw.attrs.end()) return std::nullopt;
      return it->second;
    };
    auto resolve_truss = [&]() {
      auto t = attr("truss");
      if (!t) throw UnresolvedReference(raw.name + ": missing 'truss' attribute");
      d.truss_ref = *t;
      return f.truss(*t);
    };
    auto truss_symbols = [&]() -> SymbolTable {
      return symbols_of(f.get(d.truss_ref).symbols, d.truss_ref);
    };
    try {
      if (raw.kind == "heap") {
        d.kind = DeclKind::Heap;
        d.heap = std::make_shared<FiniteHeap>(
            validate_heap(n, dense_table(raw, "bracket", {&st, &st, &st}, st, {n, n, n})));
      } else if (raw.kind == "group") {
        d.kind = DeclKind::Group;
        auto zero = attr("zero");
        if (!zero) throw UnresolvedReference(raw.name + ": missing 'zero'");
        d.group = std::make_shared<FiniteGroup>(validate_group(
            n, dense_table(raw, "add", {&st, &st}, st, {n, n}),
            dense_table(raw, "neg", {&st}, st, {n}), st.resolve(*zero, raw.name)));
      } else if (raw.kind == "ring") {
        d.kind = DeclKind::Ring;
        auto zero = attr("zero");
        if (!zero) throw UnresolvedReference(raw.name + ": missing 'zero'");
        FiniteGroup g{n, dense_table(raw, "add", {&st, &st}, st, {n, n}),
                      dense_table(raw, "neg", {&st}, st, {n}), st.resolve(*zero, raw.name)};
        std::optional<Elem> unit;
        if (auto u = attr("unit")) unit = st.resolve(*u, raw.name);
        d.ring = std::make_shared<FiniteRing>(
            validate_ring(std::move(g), dense_table(raw, "mul", {&st, &st}, st, {n, n}), unit));
      } else if (raw.kind == "truss") {
        d.kind = DeclKind::Truss;
        std::optional<Elem> unit;
        if (auto u = attr("unit")) unit = st.resolve(*u, raw.name);
        d.truss = std::make_shared<FiniteTruss>(validate_truss(
            validate_heap(n, dense_table(raw, "bracket", {&st, &st, &st}, st, {n, n, n})),
            dense_table(raw, "mul", {&st, &st}, st, {n, n}), unit));
      } else if (raw.kind == "module") {
        d.kind = DeclKind::Module;
        TrussPtr t = resolve_truss();
        SymbolTable ts = truss_symbols();
        FiniteHeap h =
            validate_heap(n, dense_table(raw, "bracket", {&st, &st, &st}, st, {n, n, n}));
        d.module = validate_module(
            t, std::move(h), dense_table(raw, "action", {&ts, &st}, st, {t->size(), n}));
      } else if (raw.kind == "pointed") {
        d.kind = DeclKind::Pointed;
        TrussPtr t = resolve_truss();
        SymbolTable ts = truss_symbols();
        auto zero = attr("zero");
        if (!zero) throw UnresolvedReference(raw.name + ": missing 'zero'");
        FiniteGroup g{n, dense_table(raw, "add", {&st, &st}, st, {n, n}),
                      dense_table(raw, "neg", {&st}, st, {n}), st.resolve(*zero, raw.name)};
        d.pointed = validate_pointed(
            t, std::move(g), dense_table(raw, "action", {&ts, &st}, st, {t->size(), n}));
      } else if (raw.kind == "hom") {
        d.kind = DeclKind::Hom;
        TrussPtr t = resolve_truss();
        SymbolTable ts = truss_symbols();
        FiniteHeap h =
            validate_heap(n, dense_table(raw, "bracket", {&st, &st, &st}, st, {n, n, n}));
        d.hom = validate_hom(t, std::move(h),
                             dense_table(raw, "taction", {&ts, &st, &st}, st,
                                         {t->size(), n, n}));
      } else if (raw.kind == "morphism") {
        d.kind = DeclKind::Morphism;
        auto kind = attr("kind");
        auto dom = attr("dom");
        auto cod = attr("cod");
        if (!kind || !dom || !cod)
          throw UnresolvedReference(raw.name + ": morphism needs kind/dom/cod");
        d.morphism.dom = *dom;
        d.morphism.cod = *cod;
        const Decl& dd = f.get(*dom);
        const Decl& cd = f.get(*cod);
        SymbolTable ds = symbols_of(dd.symbols, *dom);
        SymbolTable cs = symbols_of(cd.symbols, *cod);
        d.morphism.map = dense_table(raw, "map", {&ds}, cs,
                                     {static_cast<int>(dd.symbols.size())});
        if (*kind == "heap") {
          d.morphism.kind = MorphKind::Heap;
          if (!dd.heap || !cd.heap) throw UnresolvedReference(raw.name + ": heap dom/cod");
          if (auto v = check_heap_morphism(*dd.heap, *cd.heap, d.morphism.map))
            throw NotAMorphism(*v);
        } else if (*kind == "hom") {
          d.morphism.kind = MorphKind::Hom;
          if (!dd.hom || !cd.hom) throw UnresolvedReference(raw.name + ": hom dom/cod");
          if (auto v = check_hom_morphism(*dd.hom, *cd.hom, d.morphism.map))
            throw NotAMorphism(*v);
        } else if (*kind == "pointed") {
          d.morphism.kind = MorphKind::Pointed;
          if (!dd.pointed || !cd.pointed)
            throw UnresolvedReference(raw.name + ": pointed dom/cod");
          if (!is_pointed_morphism(*dd.pointed, *cd.pointed, d.morphism.map))
            throw NotAMorphism(Violation{"pointed-morphism", {}});
        } else if (*kind == "module") {
          d.morphism.kind = MorphKind::Module;
          if (!dd.module || !cd.module)
            throw UnresolvedReference(raw.name + ": module dom/cod");
          if (auto v = check_heap_morphism(dd.module->heap, cd.module->heap, d.morphism.map))
            throw NotAMorphism(*v);
          for (Elem t = 0; t < dd.module->truss->size(); ++t)
            for (Elem m = 0; m < dd.module->size(); ++m)
              if (d.morphism.map[dd.module->act(t, m)] !=
                  cd.module->act(t, d.morphism.map[m]))
                throw NotAMorphism(Violation{"module-morphism", {t, m}});
        } else if (*kind == "truss") {
          d.morphism.kind = MorphKind::Truss;
          if (!dd.truss || !cd.truss) throw UnresolvedReference(raw.name + ": truss dom/cod");
          if (!is_truss_morphism(*dd.truss, *cd.truss, d.morphism.map))
            throw NotAMorphism(Violation{"truss-morphism", {}});
        } else {
          throw UnresolvedReference(raw.name + ": unknown morphism kind '" + *kind + "'");
        }
      } else if (raw.kind == "fork") {
        d.kind = DeclKind::Fork;
        d.refs = raw.refs;
        if (d.refs.size() != 3) throw UnresolvedReference(raw.name + ": fork needs 3 members");
        for (auto& r : d.refs) f.get(r);
      } else if (raw.kind == "sequence") {
        d.kind = DeclKind::Sequence;
        d.refs = raw.refs;
        if (d.refs.size() < 2)
          throw UnresolvedReference(raw.name + ": sequence needs >= 2 members");
        for (auto& r : d.refs) f.get(r);
      } else {
        throw SyntaxError(raw.line, 1, "unknown declaration kind '" + raw.kind + "'");
      }
    } catch (const AxiomViolation& e) {
      throw AxiomViolation(
          Violation{e.violation.law, e.violation.witness, raw.name + ": " + e.violation.detail});
    }
    f.decls.push_back(std::move(d));
  }
  return f;
}

namespace {

void print_table(std::ostringstream& os, const std::string& key,
                 const std::vector<const std::vector<std::string>*>& arg_names,
                 const std::vector<int>& dims, const std::vector<Elem>& table,
                 const std::vector<std::string>& val_names) {
  if (table.empty()) return;
  os << "  " << key << " {\n";
  std::vector<int> idx(dims.size(), 0);
  size_t flat = 0;
  while (true) {
    os << "   ";
    for (size_t i = 0; i < dims.size(); ++i) os << " " << (*arg_names[i])[idx[i]];
    os << " = " << val_names[table[flat]] << "\n";
    ++flat;
    int i = static_cast<int>(dims.size()) - 1;
    while (i >= 0 && idx[i] + 1 == dims[i]) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  os << "  }\n";
}

const char* kind_name(MorphKind k) {
  switch (k) {
    case MorphKind::Heap: return "heap";
    case MorphKind::Hom: return "hom";
    case MorphKind::Module: return "module";
    case MorphKind::Pointed: return "pointed";
    case MorphKind::Truss: return "truss";
  }
  return "?";
}

}  // namespace

std::string print_structure_file(const StructureFile& f) {
  std::ostringstream os;
  for (const Decl& d : f.decls) {
    const auto& sy = d.symbols;
    const int n = static_cast<int>(sy.size());
    auto carrier_line = [&]() {
      os << "  carrier";
      for (auto& s : sy) os << " " << s;
      os << "\n";
    };
    switch (d.kind) {
      case DeclKind::Heap: {
        os << "heap " << d.name << " {\n";
        carrier_line();
        print_table(os, "bracket", {&sy, &sy, &sy}, {n, n, n}, d.heap->bracket, sy);
        os << "}\n";
        break;
      }
      case DeclKind::Group: {
        os << "group " << d.name << " {\n";
        carrier_line();
        os << "  zero " << sy[d.group->zero] << "\n";
        print_table(os, "add", {&sy, &sy}, {n, n}, d.group->add, sy);
        print_table(os, "neg", {&sy}, {n}, d.group->neg, sy);
        os << "}\n";
        break;
      }
      case DeclKind::Ring: {
        os << "ring " << d.name << " {\n";
        carrier_line();
        os << "  zero " << sy[d.ring->group.zero] << "\n";
        if (d.ring->unit) os << "  unit " << sy[*d.ring->unit] << "\n";
        print_table(os, "add", {&sy, &sy}, {n, n}, d.ring->group.add, sy);
        print_table(os, "neg", {&sy}, {n}, d.ring->group.neg, sy);
        print_table(os, "mul", {&sy, &sy}, {n, n}, d.ring->mul, sy);
        os << "}\n";
        break;
      }
      case DeclKind::Truss: {
        os << "truss " << d.name << " {\n";
        carrier_line();
        if (d.truss->unit) os << "  unit " << sy[*d.truss->unit] << "\n";
        print_table(os, "bracket", {&sy, &sy, &sy}, {n, n, n}, d.truss->heap.bracket,
                    sy);
        print_table(os, "mul", {&sy, &sy}, {n, n}, d.truss->mul, sy);
        os << "}\n";
        break;
      }
      case DeclKind::Module: {
        os << "module " << d.name << " {\n";
        os << "  truss " << d.truss_ref << "\n";
        carrier_line();
        const auto& ts = f.get(d.truss_ref).symbols;
        print_table(os, "bracket", {&sy, &sy, &sy}, {n, n, n}, d.module->heap.bracket,
                    sy);
        print_table(os, "action", {&ts, &sy}, {static_cast<int>(ts.size()), n},
                    d.module->action, sy);
        os << "}\n";
        break;
      }
      case DeclKind::Pointed: {
        os << "pointed " << d.name << " {\n";
        os << "  truss " << d.truss_ref << "\n";
        carrier_line();
        os << "  zero " << sy[d.pointed->group.zero] << "\n";
        const auto& ts = f.get(d.truss_ref).symbols;
        print_table(os, "add", {&sy, &sy}, {n, n}, d.pointed->group.add, sy);
        print_table(os, "neg", {&sy}, {n}, d.pointed->group.neg, sy);
        print_table(os, "action", {&ts, &sy}, {static_cast<int>(ts.size()), n},
                    d.pointed->action, sy);
        os << "}\n";
        break;
      }
      case DeclKind::Hom: {
        os << "hom " << d.name << " {\n";
        os << "  truss " << d.truss_ref << "\n";
        carrier_line();
        const auto& ts = f.get(d.truss_ref).symbols;
        print_table(os, "bracket", {&sy, &sy, &sy}, {n, n, n}, d.hom->heap.bracket, sy);
        print_table(os, "taction", {&ts, &sy, &sy},
                    {static_cast<int>(ts.size()), n, n}, d.hom->taction, sy);
        os << "}\n";
        break;
      }
      case DeclKind::Morphism: {
        os << "morphism " << d.name << " {\n";
        os << "  kind " << kind_name(d.morphism.kind) << "\n";
        os << "  dom " << d.morphism.dom << "\n";
        os << "  cod " << d.morphism.cod << "\n";
        const auto& ds = f.get(d.morphism.dom).symbols;
        const auto& cs = f.get(d.morphism.cod).symbols;
        print_table(os, "map", {&ds}, {static_cast<int>(ds.size())}, d.morphism.map,
                    cs);
        os << "}\n";
        break;
      }
      case DeclKind::Fork:
      case DeclKind::Sequence: {
        os << (d.kind == DeclKind::Fork ? "fork " : "sequence ") << d.name << " {\n";
        os << "  members";
        for (auto& r : d.refs) os << " " << r;
        os << "\n}\n";
        break;
      }
    }
  }
  return os.str();
}

namespace {

std::vector<std::string> default_symbols(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

StructureFile shipped_fixtures_file() {
  const Corpus& c = corpus();
  StructureFile f;
  std::map<const FiniteTruss*, std::string> truss_names;
  for (auto& [name, t] : c.trusses) {
    Decl d;
    d.kind = DeclKind::Truss;
    d.name = name;
    d.symbols = default_symbols("t", t->size());
    d.truss = t;
    truss_names[t.get()] = name;
    f.decls.push_back(std::move(d));
  }
  for (auto& [name, h] : c.heaps) {
    Decl d;
    d.kind = DeclKind::Heap;
    d.name = name;
    d.symbols = default_symbols("e", h->n);
    d.heap = h;
    f.decls.push_back(std::move(d));
  }
  for (auto& [name, r] : c.rings) {
    Decl d;
    d.kind = DeclKind::Ring;
    d.name = name;
    d.symbols = default_symbols("r", r->size());
    d.ring = r;
    f.decls.push_back(std::move(d));
  }
  for (auto& [name, m] : c.modules) {
    Decl d;
    d.kind = DeclKind::Module;
    d.name = name;
    d.symbols = default_symbols("m", m->size());
    d.module = m;
    d.truss_ref = truss_names.at(m->truss.get());
    f.decls.push_back(std::move(d));
  }
  for (auto& [name, p] : c.pointeds) {
    Decl d;
    d.kind = DeclKind::Pointed;
    d.name = name;
    d.symbols = default_symbols("g", p->size());
    d.pointed = p;
    d.truss_ref = truss_names.at(p->truss.get());
    f.decls.push_back(std::move(d));
  }
  for (auto& [name, h] : c.homs) {
    Decl d;
    d.kind = DeclKind::Hom;
    d.name = name;
    d.symbols = default_symbols("m", h->size());
    d.hom = h;
    d.truss_ref = truss_names.at(h->truss.get());
    f.decls.push_back(std::move(d));
  }
  return f;
}

bool same_structure_file(const StructureFile& a, const StructureFile& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (size_t i = 0; i < a.decls.size(); ++i) {
    const Decl& x = a.decls[i];
    const Decl& y = b.decls[i];
    if (x.kind != y.kind || x.name != y.name || x.symbols != y.symbols) return false;
    switch (x.kind) {
      case DeclKind::Heap:
        if (x.heap->bracket != y.heap->bracket) return false;
        break;
      case DeclKind::Group:
        if (x.group->add != y.group->add || x.group->zero != y.group->zero) return false;
        break;
      case DeclKind::Ring:
        if (x.ring->group.add != y.ring->group.add || x.ring->mul != y.ring->mul ||
            x.ring->unit != y.ring->unit)
          return false;
        break;
      case DeclKind::Truss:
        if (x.truss->heap.bracket != y.truss->heap.bracket || x.truss->mul != y.truss->mul ||
            x.truss->unit != y.truss->unit)
          return false;
        break;
      case DeclKind::Module:
        if (x.module->heap.bracket != y.module->heap.bracket ||
            x.module->action != y.module->action || x.truss_ref != y.truss_ref)
          return false;
        break;
      case DeclKind::Pointed:
        if (x.pointed->group.add != y.pointed->group.add ||
            x.pointed->action != y.pointed->action || x.truss_ref != y.truss_ref)
          return false;
        break;
      case DeclKind::Hom:
        if (x.hom->heap.bracket != y.hom->heap.bracket || x.hom->taction != y.hom->taction ||
            x.truss_ref != y.truss_ref)
          return false;
        break;
      case DeclKind::Morphism:
        if (x.morphism.kind != y.morphism.kind || x.morphism.dom != y.morphism.dom ||
            x.morphism.cod != y.morphism.cod || x.morphism.map != y.morphism.map)
          return false;
        break;
      case DeclKind::Fork:
      case DeclKind::Sequence:
        if (x.refs != y.refs) return false;
        break;
    }
  }
  return true;
}

}  // namespace heapmod
