#pragma once

#include <cstddef>
#include <string>

#include "isokit/fincat.hpp"
#include "isokit/fingroup.hpp"

// Stock groups and index categories used across tests, the workspace
// generator and the documentation examples.  Element and morphism names stay
// clear of the reserved characters '@', ':', '(', ')' and whitespace so they
// can appear inside generated signatures and s-expressions.

namespace isokit::catalog {

grp::FinGroup trivial_group();
grp::FinGroup cyclic(std::size_t n);      // elements "0".."n-1"
grp::FinGroup sym3();                     // e, r, r2, s, rs, r2s (r=3-cycle)
grp::FinGroup dihedral(std::size_t n);    // order 2n: e, r..; s, rs..  (srs=r⁻¹)
grp::FinGroup klein4();                   // e, a, b, ab

cat::FinCategory terminal_category();     // object *, morphism id
cat::FinCategory discrete(std::size_t n); // objects "o0".."o{n-1}"
cat::FinCategory arrow_category();        // 0 → 1
cat::FinCategory parallel_pair();         // f, g : 0 ⇉ 1
cat::FinCategory cospan();                // 0 → 2 ← 1 (legs f, g)
cat::FinCategory square_poset();          // commutative square a→b→d, a→c→d
// One-object category on the cyclic group of order n, morphisms e, t, t2...
cat::FinCategory bz(std::size_t n);
// One-object category on a group; morphism names are the element names.
cat::FinCategory delooping(const grp::FinGroup& g);

}  // namespace isokit::catalog
