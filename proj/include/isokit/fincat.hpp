#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "isokit/validation.hpp"

// Finite categories with an explicit composition table, and exhaustive
// enumeration of the natural automorphisms of the identity functor.

namespace isokit::cat {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct MorDecl {
  std::string name;
  std::string dom, cod;  // object names
};

struct FinCategory {
  std::vector<std::string> objects;
  std::vector<MorDecl> morphisms;
  std::vector<std::size_t> identity;  // per object: morphism index
  // compose_table[g][f] = g∘f when cod(f) = dom(g), npos otherwise.
  std::vector<std::vector<std::size_t>> compose_table;

  std::optional<std::size_t> object_index(const std::string& name) const;
  std::optional<std::size_t> morphism_index(const std::string& name) const;
  std::size_t dom(std::size_t m) const;
  std::size_t cod(std::size_t m) const;
  bool composable(std::size_t g, std::size_t f) const;  // g after f
  std::size_t compose(std::size_t g, std::size_t f) const;
  std::vector<std::size_t> endos(std::size_t obj) const;
  // Inverse morphism if m is iso, else nullopt.
  std::optional<std::size_t> inverse(std::size_t m) const;
  std::size_t composable_pairs() const;
};

// Typing of the table, identity laws and associativity, each violation with
// a concrete witness.
ValidationReport check_category(const FinCategory& c);

// Natural transformation Id_J → Id_J: one endomorphism per object.
struct IdNatAut {
  std::vector<std::size_t> component;  // per object: endo morphism index
  bool operator==(const IdNatAut&) const = default;
  bool operator<(const IdNatAut& o) const { return component < o.component; }
};

// Aut(Id_J) under componentwise composition, enumerated exhaustively and
// sorted lexicographically by component index sequence.
struct IdAutGroup {
  std::vector<IdNatAut> elements;

  std::size_t order() const { return elements.size(); }
  std::size_t index_of(const IdNatAut& a) const;
};

IdAutGroup aut_identity_functor(const FinCategory& c);

IdNatAut compose(const FinCategory& c, const IdNatAut& g, const IdNatAut& f);
IdNatAut invert(const FinCategory& c, const IdNatAut& a);
IdNatAut identity_aut(const FinCategory& c);

}  // namespace isokit::cat
