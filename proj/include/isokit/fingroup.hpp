#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isokit/validation.hpp"

// Finite groups as Cayley tables, with exhaustive automorphism-group
// enumeration at small order.

namespace isokit::grp {

// Element maps between groups (or within one) are plain index tables.
using ElemMap = std::vector<std::size_t>;

struct FinGroup {
  std::vector<std::string> elements;
  std::size_t unit = 0;
  std::vector<std::vector<std::size_t>> mul;  // mul[a][b] = a·b
  std::vector<std::size_t> inv;

  std::size_t order() const { return elements.size(); }
  std::size_t op(std::size_t a, std::size_t b) const { return mul[a][b]; }
  std::size_t inverse(std::size_t a) const { return inv[a]; }
  std::optional<std::size_t> element(const std::string& name) const;
  std::size_t elem_order(std::size_t a) const;

  // Derives the inverse table from the Cayley table; throws
  // std::invalid_argument when some element has no two-sided inverse.
  static FinGroup from_mul_table(std::vector<std::string> elements,
                                 std::size_t unit,
                                 std::vector<std::vector<std::size_t>> mul);
};

// Group laws (associativity, unit, inverses) with witnesses.
ValidationReport check_group(const FinGroup& g);

// h : src → tgt given by an index table; checks h(ab) = h(a)h(b).
ValidationReport check_hom(const FinGroup& src, const FinGroup& tgt,
                           const ElemMap& h);

bool is_bijective(const ElemMap& h);

ElemMap compose_maps(const ElemMap& g, const ElemMap& f);  // g∘f
ElemMap identity_map(std::size_t n);
ElemMap invert_map(const ElemMap& h);  // h must be bijective

// Conjugation x ↦ s·x·s⁻¹.
ElemMap inn(const FinGroup& g, std::size_t s);

// All automorphisms, found by assigning images to a small generating set and
// extending; sorted lexicographically as tables (the identity map first).
std::vector<ElemMap> automorphism_group(const FinGroup& g);

// Greedily grown generating sequence (empty for the trivial group).
std::vector<std::size_t> generating_set(const FinGroup& g);

// Element indices of the center, ascending.
std::vector<std::size_t> center(const FinGroup& g);

}  // namespace isokit::grp
