#include "isokit/json_io.hpp"

#include <filesystem>
#include <fstream>

#include "isokit/sexpr.hpp"

namespace isokit::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t index_in(const std::vector<std::string>& names,
                     const std::string& name, const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw SchemaError(std::string("unknown ") + what + " '" + name + "'");
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return j;
}

FileKind detect_kind(const json& j) {
  if (j.is_string()) return FileKind::Term;
  if (!j.is_object()) return FileKind::Unknown;
  if (j.contains("objects") && j.contains("morphisms")) return FileKind::Category;
  if (j.contains("on_objects")) return FileKind::Presheaf;
  if (j.contains("elements") && j.contains("mul")) return FileKind::Group;
  if (j.contains("sorts") && j.contains("axioms")) return FileKind::Theory;
  if (j.contains("carriers")) return FileKind::Structure;
  if (j.contains("components")) return FileKind::NatTrans;
  if (j.contains("term")) return FileKind::Term;
  return FileKind::Unknown;
}

std::string kind_name(FileKind k) {
  switch (k) {
    case FileKind::Category: return "category";
    case FileKind::Group: return "group";
    case FileKind::Presheaf: return "presheaf";
    case FileKind::Theory: return "theory";
    case FileKind::Structure: return "structure";
    case FileKind::NatTrans: return "nat-trans";
    case FileKind::Term: return "term";
    case FileKind::Unknown: break;
  }
  return "unknown";
}

grp::FinGroup group_from_json(const json& j) {
  grp::FinGroup g;
  for (const auto& e : field(j, "elements"))
    g.elements.push_back(str(e, "element"));
  if (g.elements.empty()) throw SchemaError("group needs at least one element");
  g.unit = index_in(g.elements, str(field(j, "unit"), "unit"), "element");
  const json& mul = field(j, "mul");
  if (!mul.is_array() || mul.size() != g.elements.size())
    throw SchemaError("mul table must have one row per element");
  for (const auto& row : mul) {
    if (!row.is_array() || row.size() != g.elements.size())
      throw SchemaError("mul table row has wrong length");
    std::vector<std::size_t> r;
    for (const auto& cell : row)
      r.push_back(index_in(g.elements, str(cell, "product"), "element"));
    g.mul.push_back(std::move(r));
  }
  // Derive inverses where they exist; leave self fallbacks for check_group
  // to report instead of failing the load.
  g.inv.assign(g.elements.size(), 0);
  for (std::size_t a = 0; a < g.elements.size(); ++a) {
    g.inv[a] = a;
    for (std::size_t b = 0; b < g.elements.size(); ++b)
      if (g.mul[a][b] == g.unit && g.mul[b][a] == g.unit) {
        g.inv[a] = b;
        break;
      }
  }
  return g;
}

json group_to_json(const grp::FinGroup& g) {
  json j;
  j["elements"] = g.elements;
  j["unit"] = g.elements[g.unit];
  json mul = json::array();
  for (const auto& row : g.mul) {
    json r = json::array();
    for (std::size_t v : row) r.push_back(g.elements[v]);
    mul.push_back(std::move(r));
  }
  j["mul"] = std::move(mul);
  return j;
}

cat::FinCategory category_from_json(const json& j) {
  cat::FinCategory c;
  for (const auto& o : field(j, "objects"))
    c.objects.push_back(str(o, "object"));
  std::vector<std::string> mnames;
  for (const auto& m : field(j, "morphisms")) {
    cat::MorDecl d;
    d.name = str(field(m, "name"), "morphism name");
    d.dom = str(field(m, "dom"), "dom");
    d.cod = str(field(m, "cod"), "cod");
    mnames.push_back(d.name);
    c.morphisms.push_back(std::move(d));
  }
  const json& ids = field(j, "identities");
  if (!ids.is_object()) throw SchemaError("identities must map objects to morphisms");
  c.identity.assign(c.objects.size(), cat::npos);
  for (const auto& [obj, mor] : ids.items()) {
    std::size_t o = index_in(c.objects, obj, "object");
    c.identity[o] = index_in(mnames, str(mor, "identity"), "morphism");
  }
  for (std::size_t o = 0; o < c.objects.size(); ++o)
    if (c.identity[o] == cat::npos)
      throw SchemaError("missing identity for object " + c.objects[o]);
  c.compose_table.assign(mnames.size(),
                         std::vector<std::size_t>(mnames.size(), cat::npos));
  for (const auto& triple : field(j, "composition")) {
    if (!triple.is_array() || triple.size() != 3)
      throw SchemaError("composition entries are [g, f, gf] triples");
    std::size_t g = index_in(mnames, str(triple[0], "morphism"), "morphism");
    std::size_t f = index_in(mnames, str(triple[1], "morphism"), "morphism");
    std::size_t gf = index_in(mnames, str(triple[2], "morphism"), "morphism");
    c.compose_table[g][f] = gf;
  }
  // Identity composites may be omitted in files.
  for (std::size_t f = 0; f < mnames.size(); ++f) {
    std::size_t idc = c.identity[c.cod(f)], idd = c.identity[c.dom(f)];
    if (c.compose_table[idc][f] == cat::npos) c.compose_table[idc][f] = f;
    if (c.compose_table[f][idd] == cat::npos) c.compose_table[f][idd] = f;
  }
  return c;
}

json category_to_json(const cat::FinCategory& c) {
  json j;
  j["objects"] = c.objects;
  json mors = json::array();
  for (const auto& m : c.morphisms)
    mors.push_back({{"name", m.name}, {"dom", m.dom}, {"cod", m.cod}});
  j["morphisms"] = std::move(mors);
  json ids;
  for (std::size_t o = 0; o < c.objects.size(); ++o)
    ids[c.objects[o]] = c.morphisms[c.identity[o]].name;
  j["identities"] = std::move(ids);
  json comp = json::array();
  for (std::size_t g = 0; g < c.morphisms.size(); ++g)
    for (std::size_t f = 0; f < c.morphisms.size(); ++f)
      if (c.composable(g, f) && c.compose_table[g][f] != cat::npos)
        comp.push_back({c.morphisms[g].name, c.morphisms[f].name,
                        c.morphisms[c.compose_table[g][f]].name});
  j["composition"] = std::move(comp);
  return j;
}

psh::GroupPresheaf presheaf_from_file(const std::string& path) {
  json j = load_json_file(path);
  std::filesystem::path dir = std::filesystem::path(path).parent_path();
  auto resolve = [&dir](const std::string& ref) {
    return (dir / ref).string();
  };
  psh::GroupPresheaf f;
  f.base = category_from_json(load_json_file(resolve(str(field(j, "category"), "category ref"))));
  const json& on_objects = field(j, "on_objects");
  f.groups.resize(f.base.objects.size());
  std::vector<bool> have(f.base.objects.size(), false);
  for (const auto& [obj, ref] : on_objects.items()) {
    auto o = f.base.object_index(obj);
    if (!o) throw SchemaError("unknown object '" + obj + "' in on_objects");
    f.groups[*o] = group_from_json(load_json_file(resolve(str(ref, "group ref"))));
    have[*o] = true;
  }
  for (std::size_t o = 0; o < have.size(); ++o)
    if (!have[o])
      throw SchemaError("missing group for object " + f.base.objects[o]);
  f.action.resize(f.base.morphisms.size());
  const json& on_morphisms = field(j, "on_morphisms");
  std::vector<bool> filled(f.base.morphisms.size(), false);
  for (const auto& [mor, table] : on_morphisms.items()) {
    auto m = f.base.morphism_index(mor);
    if (!m) throw SchemaError("unknown morphism '" + mor + "' in on_morphisms");
    const grp::FinGroup& src = f.groups[f.base.dom(*m)];
    const grp::FinGroup& tgt = f.groups[f.base.cod(*m)];
    if (!table.is_object())
      throw SchemaError("on_morphisms entry for " + mor + " must map elements");
    grp::ElemMap map(src.order(), 0);
    std::vector<bool> seen(src.order(), false);
    for (const auto& [from, to] : table.items()) {
      std::size_t a = index_in(src.elements, from, "element");
      map[a] = index_in(tgt.elements, str(to, "image"), "element");
      seen[a] = true;
    }
    for (std::size_t a = 0; a < src.order(); ++a)
      if (!seen[a])
        throw SchemaError("on_morphisms entry for " + mor + " misses element " +
                          src.elements[a]);
    f.action[*m] = std::move(map);
    filled[*m] = true;
  }
  for (std::size_t m = 0; m < filled.size(); ++m) {
    if (filled[m]) continue;
    bool is_identity = false;
    for (std::size_t o = 0; o < f.base.objects.size(); ++o)
      is_identity = is_identity || f.base.identity[o] == m;
    if (!is_identity)
      throw SchemaError("missing on_morphisms entry for " +
                        f.base.morphisms[m].name);
    f.action[m] = grp::identity_map(f.groups[f.base.dom(m)].order());
  }
  return f;
}

std::vector<grp::ElemMap> components_from_json(const json& j,
                                               const psh::GroupPresheaf& f) {
  const json& comps = field(j, "components");
  std::vector<grp::ElemMap> out(f.base.objects.size());
  std::vector<bool> have(f.base.objects.size(), false);
  for (const auto& [obj, table] : comps.items()) {
    auto o = f.base.object_index(obj);
    if (!o) throw SchemaError("unknown object '" + obj + "' in components");
    const grp::FinGroup& g = f.groups[*o];
    grp::ElemMap map(g.order(), 0);
    std::vector<bool> seen(g.order(), false);
    for (const auto& [from, to] : table.items()) {
      std::size_t a = index_in(g.elements, from, "element");
      map[a] = index_in(g.elements, str(to, "image"), "element");
      seen[a] = true;
    }
    for (std::size_t a = 0; a < g.order(); ++a)
      if (!seen[a])
        throw SchemaError("component at " + obj + " misses element " +
                          g.elements[a]);
    out[*o] = std::move(map);
    have[*o] = true;
  }
  for (std::size_t o = 0; o < have.size(); ++o)
    if (!have[o])
      throw SchemaError("missing component for object " + f.base.objects[o]);
  return out;
}

namespace {

phl::HornFormula formula_from_json(const json& j, const phl::Signature& sig,
                                   const std::map<std::string, std::string>& ctx,
                                   const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  phl::HornFormula out;
  for (const auto& eq : j) {
    if (!eq.is_array() || eq.size() != 2)
      throw SchemaError(std::string(what) + " entries are [lhs, rhs] pairs");
    try {
      out.push_back({sx::parse_term(sig, str(eq[0], "term"), ctx),
                     sx::parse_term(sig, str(eq[1], "term"), ctx)});
    } catch (const phl::InputError& e) {
      throw SchemaError(std::string("bad term: ") + e.what());
    }
  }
  return out;
}

}  // namespace

phl::Theory theory_from_json(const json& j) {
  phl::Theory t;
  for (const auto& s : field(j, "sorts"))
    t.signature.sorts.push_back(str(s, "sort"));
  for (const auto& f : field(j, "funs")) {
    phl::FunSymbol sym;
    sym.name = str(field(f, "name"), "fun name");
    for (const auto& a : field(f, "args")) sym.args.push_back(str(a, "arg sort"));
    sym.result = str(field(f, "result"), "result sort");
    t.signature.funs.push_back(std::move(sym));
  }
  for (const auto& ax : field(j, "axioms")) {
    phl::HornSequent s;
    if (ax.contains("name")) s.name = str(ax.at("name"), "axiom name");
    std::map<std::string, std::string> ctx;
    if (ax.contains("context"))
      for (const auto& v : ax.at("context")) {
        std::string name = str(field(v, "var"), "var");
        std::string sort = str(field(v, "sort"), "sort");
        s.context.push_back({name, sort});
        ctx[name] = sort;
      }
    if (ax.contains("if"))
      s.premise = formula_from_json(ax.at("if"), t.signature, ctx, "if");
    s.conclusion = formula_from_json(field(ax, "then"), t.signature, ctx, "then");
    t.axioms.push_back(std::move(s));
  }
  return t;
}

json theory_to_json(const phl::Theory& t) {
  json j;
  j["sorts"] = t.signature.sorts;
  json funs = json::array();
  for (const auto& f : t.signature.funs)
    funs.push_back({{"name", f.name}, {"args", f.args}, {"result", f.result}});
  j["funs"] = std::move(funs);
  json axioms = json::array();
  for (const auto& ax : t.axioms) {
    json a;
    if (!ax.name.empty()) a["name"] = ax.name;
    json ctx = json::array();
    for (const auto& v : ax.context)
      ctx.push_back({{"var", v.name}, {"sort", v.sort}});
    a["context"] = std::move(ctx);
    json premise = json::array();
    for (const auto& eq : ax.premise)
      premise.push_back({sx::print_term(eq.lhs), sx::print_term(eq.rhs)});
    a["if"] = std::move(premise);
    json conclusion = json::array();
    for (const auto& eq : ax.conclusion)
      conclusion.push_back({sx::print_term(eq.lhs), sx::print_term(eq.rhs)});
    a["then"] = std::move(conclusion);
    axioms.push_back(std::move(a));
  }
  j["axioms"] = std::move(axioms);
  return j;
}

phl::PartialStructure structure_from_json(const json& j,
                                          const phl::Signature& sig) {
  phl::PartialStructure m;
  m.signature = sig;
  const json& carriers = field(j, "carriers");
  for (const auto& [sort, elems] : carriers.items()) {
    std::vector<std::string> names;
    for (const auto& e : elems) names.push_back(str(e, "element"));
    m.carriers[sort] = std::move(names);
  }
  for (const auto& s : sig.sorts)
    if (!m.carriers.count(s))
      throw SchemaError("missing carrier for sort " + s);
  if (j.contains("ops"))
    for (const auto& [fun, entries] : j.at("ops").items()) {
      const phl::FunSymbol* f = sig.fun(fun);
      if (!f) throw SchemaError("table for unknown symbol " + fun);
      auto& table = m.ops[fun];
      for (const auto& entry : entries) {
        if (!entry.is_array() || entry.size() != 2)
          throw SchemaError("op entries are [[args...], value] pairs");
        std::vector<std::size_t> args;
        const json& in = entry[0];
        if (!in.is_array() || in.size() != f->args.size())
          throw SchemaError("arity mismatch in table of " + fun);
        for (std::size_t i = 0; i < f->args.size(); ++i)
          args.push_back(index_in(m.carriers.at(f->args[i]),
                                  str(in[i], "argument"), "element"));
        table[args] = index_in(m.carriers.at(f->result),
                               str(entry[1], "value"), "element");
      }
    }
  return m;
}

fp::Word word_from_json(const grp::FinGroup& g, const json& j) {
  if (!j.is_array()) throw SchemaError("word must be an array of syllables");
  fp::Word w;
  for (const auto& s : j) {
    if (!s.is_object()) throw SchemaError("syllables are objects");
    if (s.contains("g")) {
      w.syl.push_back(fp::Syllable::group(
          index_in(g.elements, str(s.at("g"), "element"), "element")));
    } else if (s.contains("x")) {
      if (!s.at("x").is_number_integer())
        throw SchemaError("x exponent must be an integer");
      w.syl.push_back(fp::Syllable::x(0, s.at("x").get<int>()));
    } else {
      throw SchemaError("syllable needs 'g' or 'x'");
    }
  }
  return fp::normalize(g, w);
}

json word_to_json(const grp::FinGroup& g, const fp::Word& w) {
  json out = json::array();
  for (const auto& s : w.syl) {
    if (s.kind == fp::Syllable::Kind::Group)
      out.push_back({{"g", g.elements[s.elem]}});
    else
      out.push_back({{"x", s.exp}});
  }
  return out;
}

json report_to_json(const ValidationReport& r) {
  json issues = json::array();
  for (const auto& i : r.issues)
    issues.push_back({{"law", i.law}, {"detail", i.detail}});
  return issues;
}

}  // namespace isokit::io
