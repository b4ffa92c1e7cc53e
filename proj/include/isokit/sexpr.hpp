#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isokit/alpha.hpp"
#include "isokit/phl.hpp"

// S-expression reader and the two term grammars built on it.
//
// Action terms over a single-sorted diagram:
//   x              the indeterminate
//   c:NAME         constant naming an element of the component where it sits
//   (alpha f t)    action along morphism f
//   (m@i t1 t2)    function copy at object i; nullary copies may be written
//                  bare ("e@i") or in parens ("(e@i)")
// The objects of x and of constants are inferred from the enclosing
// application or action; a term with no such anchor needs the `at` hint.
//
// Theory terms over an arbitrary signature: atoms are nullary symbols when
// the signature has them, otherwise variables (whose sort comes from the
// axiom context); applications are (f t1 ... tn).

namespace isokit::sx {

struct SExpr {
  bool atom = true;
  std::string text;            // atom payload
  std::vector<SExpr> children; // list payload
};

SExpr parse(const std::string& src);  // throws phl::InputError

alpha::TermId parse_alpha_term(alpha::AlphaEngine& eng, const std::string& src,
                               std::optional<std::size_t> at);

phl::Term parse_term(const phl::Signature& sig, const std::string& src,
                     const std::map<std::string, std::string>& context);

std::string print_term(const phl::Term& t);

}  // namespace isokit::sx
