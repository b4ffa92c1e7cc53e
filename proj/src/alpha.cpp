#include "isokit/alpha.hpp"

#include <sstream>

namespace isokit::alpha {

using phl::InputError;

bool occurs(const BaseTerm& t, std::size_t mor) {
  if (t.kind == BaseTerm::Kind::XMor && t.mor == mor) return true;
  for (const auto& a : t.args)
    if (occurs(a, mor)) return true;
  return false;
}

std::size_t AlphaEngine::NodeKeyHash::operator()(const NodeKey& k) const {
  std::size_t h = k.kind;
  auto mix = [&h](std::size_t v) { h = h * 1000003u ^ v; };
  mix(k.a);
  mix(k.b);
  mix(k.c);
  for (TermId t : k.args) mix(t);
  return h;
}

AlphaEngine::AlphaEngine(tj::Diagram d) : d_(std::move(d)) {}

std::size_t AlphaEngine::carrier_size(std::size_t sort, std::size_t obj) const {
  return d_.components[obj].carriers.at(d_.base.sorts[sort]).size();
}

TermId AlphaEngine::intern(Node n) {
  NodeKey key{static_cast<std::uint8_t>(n.kind), n.a, n.b, n.c, n.args};
  auto it = pool_.find(key);
  if (it != pool_.end()) return it->second;
  TermId id = static_cast<TermId>(nodes_.size());
  nodes_.push_back(std::move(n));
  pool_.emplace(std::move(key), id);
  return id;
}

TermId AlphaEngine::ind(std::size_t sort, std::size_t obj) {
  if (sort >= d_.base.sorts.size() || obj >= d_.category.objects.size())
    throw InputError("indeterminate sort or object out of range");
  Node n;
  n.kind = Kind::Ind;
  n.a = static_cast<std::uint32_t>(sort);
  n.b = static_cast<std::uint32_t>(obj);
  n.sort = n.a;
  n.obj = n.b;
  return intern(std::move(n));
}

TermId AlphaEngine::alpha(std::size_t mor, TermId t) {
  if (mor >= d_.category.morphisms.size())
    throw InputError("action morphism out of range");
  if (d_.category.dom(mor) != object_of(t))
    throw InputError("action along " + d_.category.morphisms[mor].name +
                     " applied to a term at the wrong object");
  Node n;
  n.kind = Kind::Alpha;
  n.a = static_cast<std::uint32_t>(mor);
  n.args = {t};
  n.sort = nodes_[t].sort;
  n.obj = static_cast<std::uint32_t>(d_.category.cod(mor));
  return intern(std::move(n));
}

TermId AlphaEngine::constant(std::size_t sort, std::size_t obj,
                             std::size_t elem) {
  if (sort >= d_.base.sorts.size() || obj >= d_.category.objects.size())
    throw InputError("constant sort or object out of range");
  if (elem >= carrier_size(sort, obj))
    throw InputError("constant element out of range");
  Node n;
  n.kind = Kind::Const;
  n.a = static_cast<std::uint32_t>(sort);
  n.b = static_cast<std::uint32_t>(obj);
  n.c = static_cast<std::uint32_t>(elem);
  n.sort = n.a;
  n.obj = n.b;
  return intern(std::move(n));
}

TermId AlphaEngine::app(std::size_t fun, std::size_t obj,
                        std::vector<TermId> args) {
  if (fun >= d_.base.funs.size())
    throw InputError("function symbol out of range");
  const phl::FunSymbol& f = d_.base.funs[fun];
  if (args.size() != f.args.size())
    throw InputError("arity mismatch for " + f.name);
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::size_t want = 0;
    while (d_.base.sorts[want] != f.args[i]) ++want;
    if (sort_of(args[i]) != want || object_of(args[i]) != obj)
      throw InputError("argument " + std::to_string(i) + " of " + f.name +
                       " has the wrong sort");
  }
  std::size_t rsort = 0;
  while (d_.base.sorts[rsort] != f.result) ++rsort;
  Node n;
  n.kind = Kind::App;
  n.a = static_cast<std::uint32_t>(fun);
  n.b = static_cast<std::uint32_t>(obj);
  n.args = std::move(args);
  n.sort = static_cast<std::uint32_t>(rsort);
  n.obj = static_cast<std::uint32_t>(obj);
  return intern(std::move(n));
}

std::size_t AlphaEngine::term_size(TermId t) const {
  std::size_t n = 1;
  for (TermId a : nodes_[t].args) n += term_size(a);
  return n;
}

std::size_t AlphaEngine::alpha_depth(TermId t) const {
  std::size_t deepest = 0;
  for (TermId a : nodes_[t].args) deepest = std::max(deepest, alpha_depth(a));
  return deepest + (nodes_[t].kind == Kind::Alpha ? 1 : 0);
}

TermId AlphaEngine::push_alpha(std::size_t mor, TermId nf) {
  const auto& c = d_.category;
  if (c.identity[c.dom(mor)] == mor) return nf;
  const Node n = nodes_[nf];  // copy: interning below may grow the arena
  switch (n.kind) {
    case Kind::Ind:
      return alpha(mor, nf);
    case Kind::Alpha: {
      std::size_t composite = c.compose(mor, n.a);
      return push_alpha(composite, n.args[0]);
    }
    case Kind::Const: {
      std::size_t moved = d_.action[mor][n.a][n.c];
      return constant(n.a, c.cod(mor), moved);
    }
    case Kind::App: {
      std::vector<TermId> args;
      args.reserve(n.args.size());
      for (TermId a : n.args) args.push_back(push_alpha(mor, a));
      return app(n.a, c.cod(mor), std::move(args));
    }
  }
  throw InputError("unreachable");
}

TermId AlphaEngine::normalize(TermId t) {
  auto hit = norm_cache_.find(t);
  if (hit != norm_cache_.end()) return hit->second;
  const Node n = nodes_[t];  // copy: nodes_ may grow below
  TermId result = t;
  switch (n.kind) {
    case Kind::Ind:
    case Kind::Const:
      result = t;
      break;
    case Kind::App: {
      std::vector<TermId> args;
      args.reserve(n.args.size());
      for (TermId a : n.args) args.push_back(normalize(a));
      result = app(n.a, n.b, std::move(args));
      break;
    }
    case Kind::Alpha: {
      TermId child = normalize(n.args[0]);
      result = push_alpha(n.a, child);
      break;
    }
  }
  norm_cache_.emplace(t, result);
  return result;
}

std::optional<TermId> AlphaEngine::rewrite_step_outermost(TermId t) {
  const Node n = nodes_[t];
  const auto& c = d_.category;
  // Contract the node itself first (outermost).
  if (n.kind == Kind::Alpha) {
    std::size_t mor = n.a;
    TermId child = n.args[0];
    const Node cn = nodes_[child];  // copy: interning below may grow the arena
    if (c.identity[c.dom(mor)] == mor) return child;
    switch (cn.kind) {
      case Kind::Alpha:
        return alpha(c.compose(mor, cn.a), cn.args[0]);
      case Kind::Const:
        return constant(cn.a, c.cod(mor), d_.action[mor][cn.a][cn.c]);
      case Kind::App: {
        std::vector<TermId> args;
        args.reserve(cn.args.size());
        for (TermId a : cn.args) args.push_back(alpha(mor, a));
        return app(cn.a, c.cod(mor), std::move(args));
      }
      case Kind::Ind:
        break;  // alpha over the indeterminate is normal
    }
  }
  // Then children, rightmost first.
  for (std::size_t i = n.args.size(); i > 0; --i) {
    if (auto stepped = rewrite_step_outermost(n.args[i - 1])) {
      std::vector<TermId> args = n.args;
      args[i - 1] = *stepped;
      if (n.kind == Kind::Alpha) return alpha(n.a, args[0]);
      return app(n.a, n.b, std::move(args));
    }
  }
  return std::nullopt;
}

bool AlphaEngine::alpha_restricted(TermId t) const {
  const Node& n = nodes_[t];
  if (n.kind == Kind::Alpha) return nodes_[n.args[0]].kind == Kind::Ind;
  for (TermId a : n.args)
    if (!alpha_restricted(a)) return false;
  return true;
}

bool AlphaEngine::local_at(TermId t, std::size_t obj) const {
  const Node& n = nodes_[t];
  if (n.obj != obj) return false;
  if (n.kind == Kind::Alpha) return nodes_[n.args[0]].obj == obj;
  for (TermId a : n.args)
    if (!local_at(a, obj)) return false;
  return true;
}

TermId AlphaEngine::bracket(TermId u, std::size_t mor) {
  const auto& c = d_.category;
  std::size_t i = c.cod(mor), j = c.dom(mor);
  if (!alpha_restricted(u) || !local_at(u, i))
    throw InputError("bracket transport needs an alpha-restricted term local "
                     "at the codomain of the morphism");
  const Node n = nodes_[u];  // copy: interning below may grow the arena
  switch (n.kind) {
    case Kind::Ind:
      return alpha(mor, ind(n.a, j));
    case Kind::Alpha: {
      const Node& x = nodes_[n.args[0]];
      return alpha(c.compose(n.a, mor), ind(x.a, j));
    }
    case Kind::Const:
      return u;
    case Kind::App: {
      std::vector<TermId> args;
      args.reserve(n.args.size());
      for (TermId a : n.args) args.push_back(bracket(a, mor));
      return app(n.a, n.b, std::move(args));
    }
  }
  throw InputError("unreachable");
}

TermId AlphaEngine::push(TermId u, std::size_t mor) {
  return normalize(alpha(mor, u));
}

BaseTerm AlphaEngine::theta(TermId u) const {
  if (!alpha_restricted(u))
    throw InputError("theta is defined on alpha-restricted terms");
  std::size_t k = object_of(u);
  const Node& n = nodes_[u];
  BaseTerm out;
  switch (n.kind) {
    case Kind::Ind:
      out.kind = BaseTerm::Kind::XMor;
      out.sort = n.a;
      out.mor = d_.category.identity[k];
      return out;
    case Kind::Alpha: {
      const Node& x = nodes_[n.args[0]];
      out.kind = BaseTerm::Kind::XMor;
      out.sort = x.a;
      out.mor = n.a;
      return out;
    }
    case Kind::Const:
      out.kind = BaseTerm::Kind::Const;
      out.sort = n.a;
      out.elem = n.c;
      return out;
    case Kind::App:
      out.kind = BaseTerm::Kind::App;
      out.fun = n.a;
      out.sort = n.sort;
      for (TermId a : n.args) out.args.push_back(theta(a));
      return out;
  }
  throw InputError("unreachable");
}

BaseTerm AlphaEngine::erase_subscripts(BaseTerm t) {
  if (t.kind == BaseTerm::Kind::XMor) {
    t.kind = BaseTerm::Kind::X;
    t.mor = 0;
  }
  for (auto& a : t.args) a = erase_subscripts(std::move(a));
  return t;
}

BaseTerm AlphaEngine::theta_star(TermId u) const {
  return erase_subscripts(theta(u));
}

TermId AlphaEngine::embed(const BaseTerm& t, std::size_t obj) {
  switch (t.kind) {
    case BaseTerm::Kind::X:
      return ind(t.sort, obj);
    case BaseTerm::Kind::XMor:
      throw InputError("cannot embed a subscripted indeterminate");
    case BaseTerm::Kind::Const:
      return constant(t.sort, obj, t.elem);
    case BaseTerm::Kind::App: {
      std::vector<TermId> args;
      args.reserve(t.args.size());
      for (const auto& a : t.args) args.push_back(embed(a, obj));
      return app(t.fun, obj, std::move(args));
    }
  }
  throw InputError("unreachable");
}

TermId AlphaEngine::alpha_free(TermId u) {
  std::size_t obj = object_of(u);
  if (!alpha_restricted(u) || !local_at(u, obj))
    throw InputError("alpha erasure needs an alpha-restricted local term");
  const Node n = nodes_[u];  // copy: interning below may grow the arena
  switch (n.kind) {
    case Kind::Ind:
    case Kind::Const:
      return u;
    case Kind::Alpha:
      return n.args[0];
    case Kind::App: {
      std::vector<TermId> args;
      args.reserve(n.args.size());
      for (TermId a : n.args) args.push_back(alpha_free(a));
      return app(n.a, n.b, std::move(args));
    }
  }
  throw InputError("unreachable");
}

bool AlphaEngine::commutes_with_endo(TermId u, std::size_t mor) {
  const auto& c = d_.category;
  if (c.dom(mor) != c.cod(mor))
    throw InputError("generic commutation is asked against an endomorphism");
  std::size_t obj = c.dom(mor);
  if (!local_at(u, obj))
    throw InputError("generic commutation needs a term local at the endo's object");
  TermId nu = normalize(u);
  TermId lhs = normalize(alpha(mor, nu));
  TermId rhs = normalize(bracket(nu, mor));
  return lhs == rhs;
}

std::string AlphaEngine::show(TermId t) const {
  const Node& n = nodes_[t];
  const auto& c = d_.category;
  switch (n.kind) {
    case Kind::Ind:
      return "x";
    case Kind::Alpha:
      return "(alpha " + c.morphisms[n.a].name + " " + show(n.args[0]) + ")";
    case Kind::Const:
      return "c:" +
             d_.components[n.b].carriers.at(d_.base.sorts[n.a])[n.c];
    case Kind::App: {
      std::string head = d_.base.funs[n.a].name + "@" + c.objects[n.b];
      if (n.args.empty()) return "(" + head + ")";
      std::string out = "(" + head;
      for (TermId a : n.args) out += " " + show(a);
      return out + ")";
    }
  }
  return "?";
}

std::string AlphaEngine::show_base(const BaseTerm& t, std::size_t obj) const {
  switch (t.kind) {
    case BaseTerm::Kind::X:
      return "x";
    case BaseTerm::Kind::XMor:
      return "x@" + d_.category.morphisms[t.mor].name;
    case BaseTerm::Kind::Const:
      return "c:" +
             d_.components[obj].carriers.at(d_.base.sorts[t.sort])[t.elem];
    case BaseTerm::Kind::App: {
      std::string head = d_.base.funs[t.fun].name;
      if (t.args.empty()) return "(" + head + ")";
      std::string out = "(" + head;
      for (const auto& a : t.args) out += " " + show_base(a, obj);
      return out + ")";
    }
  }
  return "?";
}

}  // namespace isokit::alpha
