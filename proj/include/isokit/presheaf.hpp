#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isokit/fincat.hpp"
#include "isokit/fingroup.hpp"
#include "isokit/validation.hpp"

// Covariant functors J → Group on a finite index category, their natural
// transformations, and limits.

namespace isokit::psh {

struct GroupPresheaf {
  cat::FinCategory base;
  std::vector<grp::FinGroup> groups;   // per object
  std::vector<grp::ElemMap> action;    // per morphism: F(f) as index table

  const grp::FinGroup& at(std::size_t obj) const { return groups[obj]; }
  const grp::ElemMap& map_of(std::size_t mor) const { return action[mor]; }
};

// Endpoints, identities, composition and per-morphism hom laws.
ValidationReport check_presheaf(const GroupPresheaf& f);

struct NatTrans {
  const GroupPresheaf* src = nullptr;
  const GroupPresheaf* tgt = nullptr;
  std::vector<grp::ElemMap> component;  // per object

  bool operator==(const NatTrans& o) const { return component == o.component; }
};

// Components are homs and every naturality square commutes.
ValidationReport check_nat_trans(const NatTrans& t);

NatTrans compose(const NatTrans& g, const NatTrans& f);  // g after f

// All natural automorphisms F → F, enumerated object-by-object over
// automorphism_group(F(i)) with naturality pruning; sorted lexicographically
// by component tables.
std::vector<NatTrans> nat_auts(const GroupPresheaf& f);

// Tuples (g_i) with F(f)(g_dom f) = g_cod f for every morphism f.  Note the
// condition quantifies over all morphisms, including endomorphisms, so limit
// elements are fixed by the image of every endo.
std::vector<std::vector<std::size_t>> limit_of_diagram(const GroupPresheaf& f);

// The limit as a group under componentwise multiplication; element names are
// the component names joined with '|'.
grp::FinGroup limit_group(const GroupPresheaf& f);

}  // namespace isokit::psh
