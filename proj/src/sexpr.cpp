#include "isokit/sexpr.hpp"

#include <cctype>

namespace isokit::sx {

using phl::InputError;

namespace {

struct Reader {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  SExpr read() {
    skip_ws();
    if (pos >= src.size()) throw InputError("unexpected end of term");
    if (src[pos] == '(') {
      ++pos;
      SExpr list;
      list.atom = false;
      while (true) {
        skip_ws();
        if (pos >= src.size()) throw InputError("missing ')'");
        if (src[pos] == ')') {
          ++pos;
          return list;
        }
        list.children.push_back(read());
      }
    }
    if (src[pos] == ')') throw InputError("unexpected ')'");
    SExpr atom;
    std::size_t start = pos;
    while (pos < src.size() && !std::isspace(static_cast<unsigned char>(src[pos])) &&
           src[pos] != '(' && src[pos] != ')')
      ++pos;
    atom.text = src.substr(start, pos - start);
    return atom;
  }
};

}  // namespace

SExpr parse(const std::string& src) {
  Reader r{src};
  SExpr e = r.read();
  if (!r.eof()) throw InputError("trailing input after term");
  return e;
}

namespace {

// Splits "m@i" into function and object names.
std::optional<std::pair<std::string, std::string>> split_at(const std::string& s) {
  auto sep = s.find('@');
  if (sep == std::string::npos || sep == 0 || sep + 1 == s.size())
    return std::nullopt;
  return std::make_pair(s.substr(0, sep), s.substr(sep + 1));
}

struct AlphaBuilder {
  alpha::AlphaEngine& eng;

  std::size_t fun_index(const std::string& name) const {
    for (std::size_t i = 0; i < eng.base().funs.size(); ++i)
      if (eng.base().funs[i].name == name) return i;
    throw InputError("unknown function symbol " + name);
  }
  std::size_t object_index(const std::string& name) const {
    auto o = eng.category().object_index(name);
    if (!o) throw InputError("unknown object " + name);
    return *o;
  }
  std::size_t morphism_index(const std::string& name) const {
    auto m = eng.category().morphism_index(name);
    if (!m) throw InputError("unknown morphism " + name);
    return *m;
  }
  std::size_t element_index(std::size_t obj, const std::string& name) const {
    const auto& carrier =
        eng.diagram().components[obj].carriers.at(eng.base().sorts[0]);
    for (std::size_t i = 0; i < carrier.size(); ++i)
      if (carrier[i] == name) return i;
    throw InputError("unknown element " + name + " at object " +
                     eng.category().objects[obj]);
  }

  alpha::TermId build(const SExpr& e, std::optional<std::size_t> obj) {
    if (e.atom) {
      if (e.text == "x") {
        if (!obj)
          throw InputError("cannot infer the object of x; pass an at hint");
        return eng.ind(0, *obj);
      }
      if (e.text.rfind("c:", 0) == 0) {
        if (!obj)
          throw InputError("cannot infer the object of a constant; pass an at hint");
        return eng.constant(0, *obj, element_index(*obj, e.text.substr(2)));
      }
      if (split_at(e.text).has_value()) {  // bare nullary copy like e@i
        SExpr wrapped;
        wrapped.atom = false;
        wrapped.children.push_back(e);
        return build(wrapped, obj);
      }
      throw InputError("unrecognized atom " + e.text);
    }
    if (e.children.empty()) throw InputError("empty application");
    const SExpr& head = e.children[0];
    if (!head.atom) throw InputError("application head must be an atom");
    if (head.text == "alpha") {
      if (e.children.size() != 3)
        throw InputError("alpha takes a morphism and one term");
      if (!e.children[1].atom) throw InputError("alpha's morphism must be an atom");
      std::size_t mor = morphism_index(e.children[1].text);
      std::size_t cod = eng.category().cod(mor);
      if (obj && *obj != cod)
        throw InputError("term along " + e.children[1].text +
                         " sits at the wrong object");
      alpha::TermId child = build(e.children[2], eng.category().dom(mor));
      return eng.alpha(mor, child);
    }
    auto ho = split_at(head.text);
    if (!ho) throw InputError("expected fun@object head, got " + head.text);
    std::size_t fun = fun_index(ho->first);
    std::size_t at = object_index(ho->second);
    if (obj && *obj != at)
      throw InputError("application at " + ho->second + " sits at the wrong object");
    std::vector<alpha::TermId> args;
    for (std::size_t i = 1; i < e.children.size(); ++i)
      args.push_back(build(e.children[i], at));
    return eng.app(fun, at, std::move(args));
  }
};

}  // namespace

alpha::TermId parse_alpha_term(alpha::AlphaEngine& eng, const std::string& src,
                               std::optional<std::size_t> at) {
  if (eng.base().sorts.size() != 1)
    throw InputError("term parsing is supported for single-sorted bases");
  AlphaBuilder b{eng};
  return b.build(parse(src), at);
}

namespace {

phl::Term build_term(const phl::Signature& sig, const SExpr& e,
                     const std::map<std::string, std::string>& context) {
  if (e.atom) {
    const phl::FunSymbol* f = sig.fun(e.text);
    if (f) {
      if (!f->args.empty())
        throw InputError("symbol " + e.text + " needs arguments");
      return phl::Term::app(e.text);
    }
    auto it = context.find(e.text);
    if (it == context.end())
      throw InputError("unknown atom " + e.text +
                       " (neither a nullary symbol nor a context variable)");
    return phl::Term::var(e.text, it->second);
  }
  if (e.children.empty() || !e.children[0].atom)
    throw InputError("application head must be an atom");
  const std::string& name = e.children[0].text;
  const phl::FunSymbol* f = sig.fun(name);
  if (!f) throw InputError("unknown function symbol " + name);
  if (f->args.size() != e.children.size() - 1)
    throw InputError("arity mismatch for " + name);
  std::vector<phl::Term> args;
  for (std::size_t i = 1; i < e.children.size(); ++i)
    args.push_back(build_term(sig, e.children[i], context));
  return phl::Term::app(name, std::move(args));
}

}  // namespace

phl::Term parse_term(const phl::Signature& sig, const std::string& src,
                     const std::map<std::string, std::string>& context) {
  return build_term(sig, parse(src), context);
}

std::string print_term(const phl::Term& t) {
  if (t.kind == phl::Term::Kind::Var) return t.name;
  if (t.args.empty()) return t.name;
  std::string out = "(" + t.name;
  for (const auto& a : t.args) out += " " + print_term(a);
  return out + ")";
}

}  // namespace isokit::sx
