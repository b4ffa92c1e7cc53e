#include "isokit/phl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace isokit::phl {

namespace {

std::string show_term(const Term& t) {
  if (t.kind == Term::Kind::Var) return t.name;
  if (t.args.empty()) return t.name;
  std::ostringstream os;
  os << '(' << t.name;
  for (const auto& a : t.args) os << ' ' << show_term(a);
  os << ')';
  return os.str();
}

std::string show_assignment(const PartialStructure& m, const Assignment& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.context.size(); ++i) {
    if (i) os << ", ";
    const auto& carrier = m.carriers.at(a.context[i].sort);
    os << a.context[i].name << " = " << carrier.at(a.elems[i]);
  }
  return os.str();
}

}  // namespace

bool Signature::has_sort(const std::string& s) const {
  return std::find(sorts.begin(), sorts.end(), s) != sorts.end();
}

const FunSymbol* Signature::fun(const std::string& name) const {
  for (const auto& f : funs)
    if (f.name == name) return &f;
  return nullptr;
}

ValidationReport check_signature(const Signature& sig) {
  ValidationReport r;
  std::set<std::string> seen;
  for (const auto& s : sig.sorts) {
    if (!seen.insert(s).second) r.add("signature", "duplicate sort " + s);
  }
  std::set<std::string> fseen;
  for (const auto& f : sig.funs) {
    if (!fseen.insert(f.name).second)
      r.add("signature", "duplicate function symbol " + f.name);
    for (const auto& a : f.args)
      if (!sig.has_sort(a))
        r.add("signature", f.name + " uses unknown argument sort " + a);
    if (!sig.has_sort(f.result))
      r.add("signature", f.name + " uses unknown result sort " + f.result);
  }
  return r;
}

Term Term::var(std::string name, std::string sort) {
  Term t;
  t.kind = Kind::Var;
  t.name = std::move(name);
  t.sort = std::move(sort);
  return t;
}

Term Term::app(std::string fun, std::vector<Term> args) {
  Term t;
  t.kind = Kind::App;
  t.name = std::move(fun);
  t.args = std::move(args);
  return t;
}

std::string sort_of(const Signature& sig, const Term& t) {
  if (t.kind == Term::Kind::Var) {
    if (!sig.has_sort(t.sort))
      throw InputError("variable " + t.name + " has unknown sort " + t.sort);
    return t.sort;
  }
  const FunSymbol* f = sig.fun(t.name);
  if (!f) throw InputError("unknown function symbol " + t.name);
  if (f->args.size() != t.args.size())
    throw InputError("arity mismatch for " + t.name);
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    std::string got = sort_of(sig, t.args[i]);
    if (got != f->args[i])
      throw InputError("argument " + std::to_string(i) + " of " + t.name +
                       " has sort " + got + ", expected " + f->args[i]);
  }
  return f->result;
}

namespace {

void collect_vars(const Term& t, std::map<std::string, std::string>& vars,
                  ValidationReport& r) {
  if (t.kind == Term::Kind::Var) {
    auto [it, inserted] = vars.emplace(t.name, t.sort);
    if (!inserted && it->second != t.sort)
      r.add("sequent", "variable " + t.name + " used at sorts " + it->second +
                           " and " + t.sort);
    return;
  }
  for (const auto& a : t.args) collect_vars(a, vars, r);
}

}  // namespace

ValidationReport check_sequent_wf(const Signature& sig, const HornSequent& s) {
  ValidationReport r;
  std::map<std::string, std::string> declared;
  for (const auto& v : s.context) {
    if (!sig.has_sort(v.sort))
      r.add("sequent", "context variable " + v.name + " has unknown sort " + v.sort);
    if (!declared.emplace(v.name, v.sort).second)
      r.add("sequent", "duplicate context variable " + v.name);
  }
  auto check_side = [&](const HornFormula& phi, const char* side) {
    for (const auto& eq : phi) {
      try {
        std::string ls = sort_of(sig, eq.lhs);
        std::string rs = sort_of(sig, eq.rhs);
        if (ls != rs)
          r.add("sequent", std::string(side) + " equation " + show_term(eq.lhs) +
                               " = " + show_term(eq.rhs) + " mixes sorts " + ls +
                               " and " + rs);
      } catch (const InputError& e) {
        r.add("sequent", std::string(side) + ": " + e.what());
      }
      std::map<std::string, std::string> used;
      collect_vars(eq.lhs, used, r);
      collect_vars(eq.rhs, used, r);
      for (const auto& [name, sort] : used) {
        auto it = declared.find(name);
        if (it == declared.end())
          r.add("sequent", "variable " + name + " not in context");
        else if (it->second != sort)
          r.add("sequent", "variable " + name + " declared at sort " +
                               it->second + " but used at " + sort);
      }
    }
  };
  check_side(s.premise, "premise");
  check_side(s.conclusion, "conclusion");
  return r;
}

ValidationReport check_theory_wf(const Theory& t) {
  ValidationReport r = check_signature(t.signature);
  for (std::size_t i = 0; i < t.axioms.size(); ++i) {
    ValidationReport a = check_sequent_wf(t.signature, t.axioms[i]);
    for (auto& issue : a.issues) {
      std::string label = t.axioms[i].name.empty()
                              ? "axiom " + std::to_string(i)
                              : "axiom " + t.axioms[i].name;
      r.add(issue.law, label + ": " + issue.detail);
    }
  }
  return r;
}

std::size_t PartialStructure::carrier_size(const std::string& sort) const {
  auto it = carriers.find(sort);
  return it == carriers.end() ? 0 : it->second.size();
}

std::optional<std::size_t> PartialStructure::element(
    const std::string& sort, const std::string& name) const {
  auto it = carriers.find(sort);
  if (it == carriers.end()) return std::nullopt;
  for (std::size_t i = 0; i < it->second.size(); ++i)
    if (it->second[i] == name) return i;
  return std::nullopt;
}

ValidationReport check_structure(const PartialStructure& m) {
  ValidationReport r = check_signature(m.signature);
  for (const auto& s : m.signature.sorts) {
    auto it = m.carriers.find(s);
    if (it == m.carriers.end()) {
      r.add("structure", "missing carrier for sort " + s);
      continue;
    }
    std::set<std::string> seen;
    for (const auto& e : it->second)
      if (!seen.insert(e).second)
        r.add("structure", "duplicate element " + e + " in carrier " + s);
  }
  for (const auto& [name, table] : m.ops) {
    const FunSymbol* f = m.signature.fun(name);
    if (!f) {
      r.add("structure", "table for unknown symbol " + name);
      continue;
    }
    for (const auto& [args, value] : table) {
      if (args.size() != f->args.size()) {
        r.add("structure", "arity mismatch in table of " + name);
        continue;
      }
      for (std::size_t i = 0; i < args.size(); ++i)
        if (args[i] >= m.carrier_size(f->args[i]))
          r.add("structure", "table of " + name + " indexes outside carrier " +
                                 f->args[i]);
      if (value >= m.carrier_size(f->result))
        r.add("structure", "table of " + name + " maps outside carrier " +
                               f->result);
    }
  }
  return r;
}

std::optional<std::size_t> eval_term(const PartialStructure& m, const Term& t,
                                     const Environment& env) {
  if (t.kind == Term::Kind::Var) {
    auto it = env.find(t.name);
    if (it == env.end())
      throw InputError("unbound variable " + t.name);
    if (it->second.sort != t.sort)
      throw InputError("variable " + t.name + " bound at sort " +
                       it->second.sort + " but used at sort " + t.sort);
    if (it->second.elem >= m.carrier_size(t.sort))
      throw InputError("binding of " + t.name + " outside carrier " + t.sort);
    return it->second.elem;
  }
  const FunSymbol* f = m.signature.fun(t.name);
  if (!f) throw InputError("unknown function symbol " + t.name);
  if (f->args.size() != t.args.size())
    throw InputError("arity mismatch for " + t.name);
  std::vector<std::size_t> argv;
  argv.reserve(t.args.size());
  for (const auto& a : t.args) {
    auto v = eval_term(m, a, env);
    if (!v) return std::nullopt;  // strictness: undefined propagates
    argv.push_back(*v);
  }
  auto table = m.ops.find(t.name);
  if (table == m.ops.end()) return std::nullopt;
  auto hit = table->second.find(argv);
  if (hit == table->second.end()) return std::nullopt;
  return hit->second;
}

namespace {

// Strong equality: both sides defined and equal.
bool formula_holds(const PartialStructure& m, const HornFormula& phi,
                   const Environment& env, std::size_t* failed) {
  for (std::size_t i = 0; i < phi.size(); ++i) {
    auto l = eval_term(m, phi[i].lhs, env);
    auto r = eval_term(m, phi[i].rhs, env);
    if (!l || !r || *l != *r) {
      if (failed) *failed = i;
      return false;
    }
  }
  return true;
}

}  // namespace

SequentCheck check_sequent(const PartialStructure& m, const HornSequent& s) {
  {
    ValidationReport wf = check_sequent_wf(m.signature, s);
    if (!wf.ok()) throw InputError("ill-formed sequent: " + wf.issues[0].detail);
  }
  std::vector<std::size_t> sizes;
  sizes.reserve(s.context.size());
  for (const auto& v : s.context) sizes.push_back(m.carrier_size(v.sort));
  // A context sort with empty carrier admits no assignments at all.
  for (std::size_t n : sizes)
    if (n == 0) return {};

  std::vector<std::size_t> odo(s.context.size(), 0);
  while (true) {
    Environment env;
    for (std::size_t i = 0; i < s.context.size(); ++i)
      env[s.context[i].name] = {s.context[i].sort, odo[i]};
    if (formula_holds(m, s.premise, env, nullptr)) {
      std::size_t failed = 0;
      if (!formula_holds(m, s.conclusion, env, &failed)) {
        SequentCheck out;
        out.holds = false;
        out.witness = Assignment{s.context, odo};
        out.failed_equation = failed;
        return out;
      }
    }
    // advance odometer
    std::size_t i = 0;
    for (; i < odo.size(); ++i) {
      if (++odo[i] < sizes[i]) break;
      odo[i] = 0;
    }
    if (i == odo.size()) break;
  }
  return {};
}

ModelReport check_model(const PartialStructure& m, const Theory& t) {
  {
    ValidationReport sr = check_structure(m);
    if (!sr.ok()) throw InputError("ill-formed structure: " + sr.issues[0].detail);
  }
  ModelReport report;
  for (std::size_t i = 0; i < t.axioms.size(); ++i) {
    SequentCheck c = check_sequent(m, t.axioms[i]);
    ++report.axioms_checked;
    if (!c.holds) {
      report.ok = false;
      report.failures.push_back(
          {i, t.axioms[i].name, *c.witness, c.failed_equation});
    }
  }
  return report;
}

std::string describe(const PartialStructure& m, const Assignment& a) {
  return show_assignment(m, a);
}

}  // namespace isokit::phl
