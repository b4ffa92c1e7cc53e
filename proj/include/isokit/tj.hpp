#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isokit/fincat.hpp"
#include "isokit/phl.hpp"
#include "isokit/presheaf.hpp"

// Translation of a quasi-equational theory T along a finite category J into
// the theory TJ whose models are functors J → T-mod: one sort copy per
// (sort, object), one function copy per (symbol, object), one unary action
// symbol per (morphism, sort), plus the action, hom and translated axioms.
//
// Generated names use '@' as a reserved separator: sort copies "A@i",
// function copies "g@i", action symbols "alpha@f@A".  Base names must not
// contain '@'.

namespace isokit::tj {

std::string object_sort(const std::string& base_sort, const std::string& obj);
std::string object_fun(const std::string& base_fun, const std::string& obj);
std::string action_fun(const std::string& mor, const std::string& base_sort);

struct AxiomCounts {
  std::size_t totality = 0;     // one per (morphism, sort)
  std::size_t identity = 0;     // one per (object, sort)
  std::size_t composition = 0;  // one per (composable pair, sort)
  std::size_t hom = 0;          // one per (morphism, function symbol)
  std::size_t translated = 0;   // one per (object, base axiom)
  std::size_t total() const {
    return totality + identity + composition + hom + translated;
  }
};

struct TJTheory {
  phl::Theory theory;
  AxiomCounts counts;
};

// Throws phl::InputError if a base name contains the reserved separator.
TJTheory build_tj(const phl::Theory& base, const cat::FinCategory& j);

// A functor J → T-mod in tables: components in declared object order and,
// per morphism, one index map per base sort.
struct Diagram {
  phl::Signature base;
  cat::FinCategory category;
  std::vector<phl::PartialStructure> components;
  // action[mor][sort index in base] : carrier(dom) → carrier(cod)
  std::vector<std::vector<std::vector<std::size_t>>> action;
};

// Packs a diagram into a single structure over the TJ signature.
phl::PartialStructure functor_to_model(const phl::Theory& base,
                                       const Diagram& d);

struct FunctorResult {
  std::optional<Diagram> diagram;  // set iff report.ok
  phl::ModelReport report;         // the TJ model check
};

// Splits a TJ-model back into a diagram, rejecting non-models with the
// failing axiom.
FunctorResult model_to_functor(const phl::Theory& base,
                               const cat::FinCategory& j,
                               const phl::PartialStructure& m);

// The theory of groups: one sort G; m, e, inv; totality plus group axioms.
phl::Theory group_theory();

// A group presheaf as a diagram over group_theory().
Diagram diagram_from_presheaf(const psh::GroupPresheaf& f);

// Inverse of diagram_from_presheaf; requires a diagram over group_theory()
// whose components are groups.
psh::GroupPresheaf presheaf_from_diagram(const Diagram& d);

}  // namespace isokit::tj
