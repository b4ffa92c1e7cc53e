#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "isokit/tj.hpp"

// Symbolic engine for closed terms over the translated signature extended
// with constants from a fixed finite model (one component structure per
// object of the index category) and one indeterminate x sorted at an object.
//
// Node kinds: the indeterminate x, an action application (alpha f t), a
// constant c:s naming an element of a component carrier, and per-object
// copies of the base function symbols.  Terms are interned in a hash-consing
// arena owned by the engine, so syntactic equality is id equality; the arena
// is confined to one engine and engines are cheap to create per worker.
//
// normalize() rewrites to the alpha-restricted canonical form in which
// action symbols are applied only to the indeterminate (and never along an
// identity morphism), evaluating constants through the model's action maps.
// Normal-form equality is a sound test for provable equality of defined
// terms; it is complete on the alpha-restricted fragment but completeness is
// not claimed beyond it.

namespace isokit::alpha {

using TermId = std::uint32_t;

enum class Kind : std::uint8_t { Ind, Alpha, Const, App };

struct Node {
  Kind kind = Kind::Ind;
  // Ind:   a = base sort, b = object
  // Alpha: a = morphism, args = {child}
  // Const: a = base sort, b = object, c = element
  // App:   a = base function symbol, b = object
  std::uint32_t a = 0, b = 0, c = 0;
  std::vector<TermId> args;
  // sort of the node: base sort index paired with object index
  std::uint32_t sort = 0, obj = 0;
};

// Term over the base signature at one object: constants from that component,
// indeterminates either subscripted by a morphism into the object (XMor,
// image of theta) or plain (X, image of theta_star).
struct BaseTerm {
  enum class Kind : std::uint8_t { X, XMor, Const, App };
  Kind kind = Kind::X;
  std::size_t sort = 0;
  std::size_t mor = 0;   // XMor
  std::size_t elem = 0;  // Const
  std::size_t fun = 0;   // App
  std::vector<BaseTerm> args;

  bool operator==(const BaseTerm&) const = default;
};

bool occurs(const BaseTerm& t, std::size_t mor);  // some XMor with this mor

class AlphaEngine {
 public:
  explicit AlphaEngine(tj::Diagram d);

  const tj::Diagram& diagram() const { return d_; }
  const phl::Signature& base() const { return d_.base; }
  const cat::FinCategory& category() const { return d_.category; }

  // Constructors validate sorts and throw phl::InputError on mismatch.
  TermId ind(std::size_t sort, std::size_t obj);
  TermId alpha(std::size_t mor, TermId t);
  TermId constant(std::size_t sort, std::size_t obj, std::size_t elem);
  TermId app(std::size_t fun, std::size_t obj, std::vector<TermId> args);

  const Node& node(TermId t) const { return nodes_[t]; }
  std::size_t sort_of(TermId t) const { return nodes_[t].sort; }
  std::size_t object_of(TermId t) const { return nodes_[t].obj; }
  std::size_t term_size(TermId t) const;
  std::size_t alpha_depth(TermId t) const;  // max nesting of action symbols

  // Leftmost-innermost normalization to alpha-restricted canonical form.
  TermId normalize(TermId t);
  // One rightmost-outermost rewrite step, or nullopt if t is normal.
  std::optional<TermId> rewrite_step_outermost(TermId t);

  bool alpha_restricted(TermId t) const;
  bool local_at(TermId t, std::size_t obj) const;

  // Bracket transport u[f]: u alpha-restricted and local at cod(f); the
  // indeterminate moves to dom(f).  Structural (no normalization).
  TermId bracket(TermId u, std::size_t mor);
  // Push transport u^f = normalize(alpha f u) for u sorted at dom(f).
  TermId push(TermId u, std::size_t mor);

  // theta: alpha-restricted u at object k becomes a term over the component
  // at k whose indeterminates are subscripted by morphisms into k.
  BaseTerm theta(TermId u) const;
  // theta_star = subscript erasure after theta.
  BaseTerm theta_star(TermId u) const;
  static BaseTerm erase_subscripts(BaseTerm t);

  // Embeds a plain-indeterminate base term at an object (constants and
  // function copies at obj, x at obj).  Rejects XMor nodes.
  TermId embed(const BaseTerm& t, std::size_t obj);

  // Erases action symbols from an alpha-restricted local term.
  TermId alpha_free(TermId u);

  // Whether u commutes generically with the endomorphism f of its object:
  // normalize(alpha f u) coincides with the bracket transport of the
  // normal form of u.
  bool commutes_with_endo(TermId u, std::size_t mor);

  std::string show(TermId t) const;
  std::string show_base(const BaseTerm& t, std::size_t obj) const;

 private:
  struct NodeKey {
    std::uint8_t kind;
    std::uint32_t a, b, c;
    std::vector<TermId> args;
    bool operator==(const NodeKey&) const = default;
  };
  struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const;
  };

  TermId intern(Node n);
  TermId push_alpha(std::size_t mor, TermId nf);  // nf already normal
  std::size_t carrier_size(std::size_t sort, std::size_t obj) const;

  tj::Diagram d_;
  std::vector<Node> nodes_;
  std::unordered_map<NodeKey, TermId, NodeKeyHash> pool_;
  std::unordered_map<TermId, TermId> norm_cache_;
};

}  // namespace isokit::alpha
