#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isokit/validation.hpp"

// Multi-sorted partial-Horn reasoning over finite structures: signatures,
// terms, Horn sequents and exhaustive satisfaction checking.  Evaluation is
// partial by design: an operation table may simply lack an entry, and a term
// whose subterm is undefined is undefined (Kleene semantics).  Undefinedness
// is an ordinary result; InputError is reserved for ill-formed input.

namespace isokit::phl {

struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct FunSymbol {
  std::string name;
  std::vector<std::string> args;
  std::string result;
};

struct Signature {
  std::vector<std::string> sorts;
  std::vector<FunSymbol> funs;

  bool has_sort(const std::string& s) const;
  const FunSymbol* fun(const std::string& name) const;  // nullptr if absent
};

ValidationReport check_signature(const Signature& sig);

struct Term {
  enum class Kind { Var, App };
  Kind kind = Kind::Var;
  std::string name;  // variable name or function symbol
  std::string sort;  // variables carry their sort; empty for applications
  std::vector<Term> args;

  static Term var(std::string name, std::string sort);
  static Term app(std::string fun, std::vector<Term> args = {});
  bool operator==(const Term&) const = default;
};

// Sort of a well-formed term; throws InputError on unknown symbols, arity or
// argument-sort mismatches.
std::string sort_of(const Signature& sig, const Term& t);

struct Equation {
  Term lhs, rhs;
  bool operator==(const Equation&) const = default;
};

// Conjunction of equations; the empty conjunction is truth.  A definedness
// assertion t↓ is expressed as the equation t = t.
using HornFormula = std::vector<Equation>;

struct VarDecl {
  std::string name, sort;
  bool operator==(const VarDecl&) const = default;
};

struct HornSequent {
  std::string name;  // label used in reports; may be empty
  std::vector<VarDecl> context;
  HornFormula premise;
  HornFormula conclusion;
};

struct Theory {
  Signature signature;
  std::vector<HornSequent> axioms;
};

ValidationReport check_sequent_wf(const Signature& sig, const HornSequent& s);
ValidationReport check_theory_wf(const Theory& t);

// Finite partial structure: named carriers per sort and partial operation
// tables keyed by argument tuples (element indices in declared order).
struct PartialStructure {
  Signature signature;
  std::map<std::string, std::vector<std::string>> carriers;
  std::map<std::string, std::map<std::vector<std::size_t>, std::size_t>> ops;

  std::size_t carrier_size(const std::string& sort) const;
  std::optional<std::size_t> element(const std::string& sort,
                                     const std::string& name) const;
};

ValidationReport check_structure(const PartialStructure& m);

struct Binding {
  std::string sort;
  std::size_t elem;
};
using Environment = std::map<std::string, Binding>;

// nullopt means the term is undefined in m under env; sort clashes between
// env and t raise InputError instead.
std::optional<std::size_t> eval_term(const PartialStructure& m, const Term& t,
                                     const Environment& env);

struct Assignment {
  std::vector<VarDecl> context;
  std::vector<std::size_t> elems;  // parallel to context
};

struct SequentCheck {
  bool holds = true;
  std::optional<Assignment> witness;             // violating assignment
  std::optional<std::size_t> failed_equation;    // index into the conclusion
};

// Exhaustive over all assignments of the context variables.  An empty
// context yields exactly one (empty) assignment; an empty carrier for a
// context sort yields none, making the sequent vacuously true.
SequentCheck check_sequent(const PartialStructure& m, const HornSequent& s);

struct ModelFailure {
  std::size_t axiom;  // index into the theory's axiom list
  std::string axiom_name;
  Assignment witness;
  std::optional<std::size_t> failed_equation;
};

struct ModelReport {
  bool ok = true;
  std::size_t axioms_checked = 0;
  std::vector<ModelFailure> failures;
};

ModelReport check_model(const PartialStructure& m, const Theory& t);

// Renders "x = a, y = b" using the carrier element names.
std::string describe(const PartialStructure& m, const Assignment& a);

}  // namespace isokit::phl
