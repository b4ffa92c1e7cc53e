#include "isokit/tj.hpp"

#include <algorithm>

namespace isokit::tj {

namespace {

void require_clean(const std::string& name) {
  if (name.find('@') != std::string::npos)
    throw phl::InputError("name '" + name +
                          "' contains the reserved separator '@'");
}

phl::Signature build_signature(const phl::Signature& base,
                               const cat::FinCategory& j) {
  for (const auto& s : base.sorts) require_clean(s);
  for (const auto& f : base.funs) require_clean(f.name);
  for (const auto& o : j.objects) require_clean(o);
  for (const auto& m : j.morphisms) require_clean(m.name);

  phl::Signature sig;
  for (const auto& s : base.sorts)
    for (const auto& o : j.objects) sig.sorts.push_back(object_sort(s, o));
  for (const auto& m : j.morphisms)
    for (const auto& s : base.sorts) {
      phl::FunSymbol f;
      f.name = action_fun(m.name, s);
      f.args = {object_sort(s, m.dom)};
      f.result = {object_sort(s, m.cod)};
      sig.funs.push_back(std::move(f));
    }
  for (const auto& o : j.objects)
    for (const auto& f : base.funs) {
      phl::FunSymbol c;
      c.name = object_fun(f.name, o);
      for (const auto& a : f.args) c.args.push_back(object_sort(a, o));
      c.result = object_sort(f.result, o);
      sig.funs.push_back(std::move(c));
    }
  return sig;
}

phl::Term translate_term(const phl::Term& t, const std::string& obj) {
  if (t.kind == phl::Term::Kind::Var)
    return phl::Term::var(t.name, object_sort(t.sort, obj));
  std::vector<phl::Term> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(translate_term(a, obj));
  return phl::Term::app(object_fun(t.name, obj), std::move(args));
}

phl::HornFormula translate_formula(const phl::HornFormula& phi,
                                   const std::string& obj) {
  phl::HornFormula out;
  out.reserve(phi.size());
  for (const auto& eq : phi)
    out.push_back({translate_term(eq.lhs, obj), translate_term(eq.rhs, obj)});
  return out;
}

}  // namespace

std::string object_sort(const std::string& base_sort, const std::string& obj) {
  return base_sort + "@" + obj;
}

std::string object_fun(const std::string& base_fun, const std::string& obj) {
  return base_fun + "@" + obj;
}

std::string action_fun(const std::string& mor, const std::string& base_sort) {
  return "alpha@" + mor + "@" + base_sort;
}

TJTheory build_tj(const phl::Theory& base, const cat::FinCategory& j) {
  TJTheory out;
  out.theory.signature = build_signature(base.signature, j);

  auto x_at = [&](const std::string& sort, const std::string& obj) {
    return phl::Term::var("x", object_sort(sort, obj));
  };

  // Totality of every action symbol.
  for (const auto& m : j.morphisms)
    for (const auto& s : base.signature.sorts) {
      phl::HornSequent ax;
      ax.name = "total@" + action_fun(m.name, s);
      ax.context = {{"x", object_sort(s, m.dom)}};
      phl::Term t = phl::Term::app(action_fun(m.name, s), {x_at(s, m.dom)});
      ax.conclusion = {{t, t}};
      out.theory.axioms.push_back(std::move(ax));
      ++out.counts.totality;
    }
  // Identity morphisms act as the identity.
  for (std::size_t o = 0; o < j.objects.size(); ++o)
    for (const auto& s : base.signature.sorts) {
      const std::string& id_name = j.morphisms[j.identity[o]].name;
      phl::HornSequent ax;
      ax.name = "id@" + object_sort(s, j.objects[o]);
      ax.context = {{"x", object_sort(s, j.objects[o])}};
      phl::Term t =
          phl::Term::app(action_fun(id_name, s), {x_at(s, j.objects[o])});
      ax.conclusion = {{t, x_at(s, j.objects[o])}};
      out.theory.axioms.push_back(std::move(ax));
      ++out.counts.identity;
    }
  // Actions compose.
  for (std::size_t f = 0; f < j.morphisms.size(); ++f)
    for (std::size_t g = 0; g < j.morphisms.size(); ++g) {
      if (!j.composable(g, f)) continue;
      std::size_t gf = j.compose(g, f);
      for (const auto& s : base.signature.sorts) {
        phl::HornSequent ax;
        ax.name = "comp@" + j.morphisms[g].name + "@" + j.morphisms[f].name +
                  "@" + s;
        ax.context = {{"x", object_sort(s, j.morphisms[f].dom)}};
        phl::Term inner = phl::Term::app(action_fun(j.morphisms[f].name, s),
                                         {x_at(s, j.morphisms[f].dom)});
        phl::Term lhs =
            phl::Term::app(action_fun(j.morphisms[g].name, s), {inner});
        phl::Term rhs = phl::Term::app(action_fun(j.morphisms[gf].name, s),
                                       {x_at(s, j.morphisms[f].dom)});
        ax.conclusion = {{lhs, rhs}};
        out.theory.axioms.push_back(std::move(ax));
        ++out.counts.composition;
      }
    }
  // Actions are homomorphisms for every base symbol.
  for (const auto& m : j.morphisms)
    for (const auto& fun : base.signature.funs) {
      phl::HornSequent ax;
      ax.name = "hom@" + m.name + "@" + fun.name;
      std::vector<phl::Term> args_dom, args_moved;
      for (std::size_t i = 0; i < fun.args.size(); ++i) {
        std::string v = "x" + std::to_string(i);
        ax.context.push_back({v, object_sort(fun.args[i], m.dom)});
        args_dom.push_back(phl::Term::var(v, object_sort(fun.args[i], m.dom)));
        args_moved.push_back(phl::Term::app(action_fun(m.name, fun.args[i]),
                                            {args_dom.back()}));
      }
      phl::Term applied = phl::Term::app(object_fun(fun.name, m.dom), args_dom);
      ax.premise = {{applied, applied}};
      phl::Term lhs =
          phl::Term::app(action_fun(m.name, fun.result), {applied});
      phl::Term rhs =
          phl::Term::app(object_fun(fun.name, m.cod), std::move(args_moved));
      ax.conclusion = {{lhs, rhs}};
      out.theory.axioms.push_back(std::move(ax));
      ++out.counts.hom;
    }
  // Object-wise translations of the base axioms.
  for (std::size_t o = 0; o < j.objects.size(); ++o)
    for (std::size_t a = 0; a < base.axioms.size(); ++a) {
      const phl::HornSequent& src = base.axioms[a];
      phl::HornSequent ax;
      std::string label =
          src.name.empty() ? std::to_string(a) : src.name;
      ax.name = "base@" + label + "@" + j.objects[o];
      for (const auto& v : src.context)
        ax.context.push_back({v.name, object_sort(v.sort, j.objects[o])});
      ax.premise = translate_formula(src.premise, j.objects[o]);
      ax.conclusion = translate_formula(src.conclusion, j.objects[o]);
      out.theory.axioms.push_back(std::move(ax));
      ++out.counts.translated;
    }
  return out;
}

phl::PartialStructure functor_to_model(const phl::Theory& base,
                                       const Diagram& d) {
  phl::PartialStructure m;
  m.signature = build_signature(base.signature, d.category);
  const auto& j = d.category;
  for (std::size_t s = 0; s < base.signature.sorts.size(); ++s)
    for (std::size_t o = 0; o < j.objects.size(); ++o)
      m.carriers[object_sort(base.signature.sorts[s], j.objects[o])] =
          d.components[o].carriers.at(base.signature.sorts[s]);
  for (std::size_t o = 0; o < j.objects.size(); ++o)
    for (const auto& fun : base.signature.funs) {
      auto it = d.components[o].ops.find(fun.name);
      if (it != d.components[o].ops.end())
        m.ops[object_fun(fun.name, j.objects[o])] = it->second;
      else
        m.ops[object_fun(fun.name, j.objects[o])] = {};
    }
  for (std::size_t mor = 0; mor < j.morphisms.size(); ++mor)
    for (std::size_t s = 0; s < base.signature.sorts.size(); ++s) {
      auto& table = m.ops[action_fun(j.morphisms[mor].name,
                                     base.signature.sorts[s])];
      const auto& map = d.action[mor][s];
      for (std::size_t x = 0; x < map.size(); ++x) table[{x}] = map[x];
    }
  return m;
}

FunctorResult model_to_functor(const phl::Theory& base,
                               const cat::FinCategory& j,
                               const phl::PartialStructure& m) {
  TJTheory tj = build_tj(base, j);
  FunctorResult out;
  out.report = phl::check_model(m, tj.theory);
  if (!out.report.ok) return out;

  Diagram d;
  d.base = base.signature;
  d.category = j;
  d.components.resize(j.objects.size());
  for (std::size_t o = 0; o < j.objects.size(); ++o) {
    phl::PartialStructure& comp = d.components[o];
    comp.signature = base.signature;
    for (const auto& s : base.signature.sorts)
      comp.carriers[s] = m.carriers.at(object_sort(s, j.objects[o]));
    for (const auto& fun : base.signature.funs) {
      auto it = m.ops.find(object_fun(fun.name, j.objects[o]));
      comp.ops[fun.name] = it == m.ops.end()
                               ? std::map<std::vector<std::size_t>, std::size_t>{}
                               : it->second;
    }
  }
  d.action.resize(j.morphisms.size());
  for (std::size_t mor = 0; mor < j.morphisms.size(); ++mor) {
    d.action[mor].resize(base.signature.sorts.size());
    for (std::size_t s = 0; s < base.signature.sorts.size(); ++s) {
      const std::string& sort = base.signature.sorts[s];
      std::size_t n = m.carriers.at(object_sort(sort, j.morphisms[mor].dom)).size();
      auto& map = d.action[mor][s];
      map.resize(n);
      const auto& table = m.ops.at(action_fun(j.morphisms[mor].name, sort));
      for (std::size_t x = 0; x < n; ++x) map[x] = table.at({x});
    }
  }
  out.diagram = std::move(d);
  return out;
}

phl::Theory group_theory() {
  using phl::Term;
  phl::Theory t;
  t.signature.sorts = {"G"};
  t.signature.funs = {{"m", {"G", "G"}, "G"}, {"e", {}, "G"}, {"inv", {"G"}, "G"}};
  Term x = Term::var("x", "G"), y = Term::var("y", "G"), z = Term::var("z", "G");
  Term e = Term::app("e");
  auto M = [](Term a, Term b) { return Term::app("m", {std::move(a), std::move(b)}); };
  auto I = [](Term a) { return Term::app("inv", {std::move(a)}); };

  auto add = [&](std::string name, std::vector<phl::VarDecl> ctx,
                 phl::HornFormula concl) {
    phl::HornSequent s;
    s.name = std::move(name);
    s.context = std::move(ctx);
    s.conclusion = std::move(concl);
    t.axioms.push_back(std::move(s));
  };
  add("total-m", {{"x", "G"}, {"y", "G"}}, {{M(x, y), M(x, y)}});
  add("total-e", {}, {{e, e}});
  add("total-inv", {{"x", "G"}}, {{I(x), I(x)}});
  add("assoc", {{"x", "G"}, {"y", "G"}, {"z", "G"}},
      {{M(M(x, y), z), M(x, M(y, z))}});
  add("unit-left", {{"x", "G"}}, {{M(e, x), x}});
  add("unit-right", {{"x", "G"}}, {{M(x, e), x}});
  add("inv-left", {{"x", "G"}}, {{M(I(x), x), e}});
  add("inv-right", {{"x", "G"}}, {{M(x, I(x)), e}});
  return t;
}

namespace {

phl::PartialStructure structure_from_group(const grp::FinGroup& g) {
  phl::PartialStructure m;
  m.signature = group_theory().signature;
  m.carriers["G"] = g.elements;
  auto& mt = m.ops["m"];
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) mt[{a, b}] = g.op(a, b);
  m.ops["e"][{}] = g.unit;
  auto& it = m.ops["inv"];
  for (std::size_t a = 0; a < g.order(); ++a) it[{a}] = g.inverse(a);
  return m;
}

}  // namespace

Diagram diagram_from_presheaf(const psh::GroupPresheaf& f) {
  Diagram d;
  d.base = group_theory().signature;
  d.category = f.base;
  for (const auto& g : f.groups)
    d.components.push_back(structure_from_group(g));
  for (const auto& a : f.action) d.action.push_back({a});
  return d;
}

psh::GroupPresheaf presheaf_from_diagram(const Diagram& d) {
  psh::GroupPresheaf f;
  f.base = d.category;
  for (const auto& comp : d.components) {
    const auto& names = comp.carriers.at("G");
    std::vector<std::vector<std::size_t>> mul(
        names.size(), std::vector<std::size_t>(names.size(), 0));
    const auto& mt = comp.ops.at("m");
    for (std::size_t a = 0; a < names.size(); ++a)
      for (std::size_t b = 0; b < names.size(); ++b) mul[a][b] = mt.at({a, b});
    std::size_t unit = comp.ops.at("e").at({});
    f.groups.push_back(grp::FinGroup::from_mul_table(names, unit, mul));
  }
  for (const auto& a : d.action) f.action.push_back(a[0]);
  return f;
}

}  // namespace isokit::tj
