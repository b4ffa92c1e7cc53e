#include "isokit/catalog.hpp"

#include <array>
#include <stdexcept>

namespace isokit::catalog {

using cat::FinCategory;
using cat::MorDecl;
using grp::FinGroup;

FinGroup trivial_group() {
  return FinGroup::from_mul_table({"e"}, 0, {{0}});
}

FinGroup cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group needs n >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return FinGroup::from_mul_table(std::move(names), 0, std::move(mul));
}

FinGroup dihedral(std::size_t n) {
  if (n < 2) throw std::invalid_argument("dihedral group needs n >= 2");
  // Elements r^i (i < n) then r^i s (i < n); (r^a s^x)(r^b s^y) uses s r = r⁻¹ s.
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(i == 0 ? "e" : (i == 1 ? "r" : "r" + std::to_string(i)));
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(i == 0 ? "s" : (i == 1 ? "rs" : "r" + std::to_string(i) + "s"));
  std::size_t order = 2 * n;
  auto code = [n](std::size_t rot, bool flip) { return rot + (flip ? n : 0); };
  std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t ra = a % n, rb = b % n;
      bool fa = a >= n, fb = b >= n;
      std::size_t rot = fa ? (ra + n - rb % n) % n : (ra + rb) % n;
      mul[a][b] = code(rot % n, fa != fb);
    }
  return FinGroup::from_mul_table(std::move(names), 0, std::move(mul));
}

FinGroup sym3() {
  FinGroup d3 = dihedral(3);
  return d3;
}

FinGroup klein4() {
  return FinGroup::from_mul_table({"e", "a", "b", "ab"}, 0,
                                  {{0, 1, 2, 3},
                                   {1, 0, 3, 2},
                                   {2, 3, 0, 1},
                                   {3, 2, 1, 0}});
}

namespace {

FinCategory finish(std::vector<std::string> objects,
                   std::vector<MorDecl> morphisms,
                   std::vector<std::size_t> identity,
                   const std::vector<std::array<std::size_t, 3>>& composites) {
  FinCategory c;
  c.objects = std::move(objects);
  c.morphisms = std::move(morphisms);
  c.identity = std::move(identity);
  std::size_t n = c.morphisms.size();
  c.compose_table.assign(n, std::vector<std::size_t>(n, cat::npos));
  // identity laws fill most of the table
  for (std::size_t f = 0; f < n; ++f) {
    c.compose_table[c.identity[c.cod(f)]][f] = f;
    c.compose_table[f][c.identity[c.dom(f)]] = f;
  }
  for (const auto& [g, f, gf] : composites) c.compose_table[g][f] = gf;
  return c;
}

}  // namespace

FinCategory terminal_category() {
  return finish({"*"}, {{"id", "*", "*"}}, {0}, {});
}

FinCategory discrete(std::size_t n) {
  std::vector<std::string> objects;
  std::vector<MorDecl> morphisms;
  std::vector<std::size_t> identity;
  for (std::size_t i = 0; i < n; ++i) {
    std::string o = "o" + std::to_string(i);
    objects.push_back(o);
    morphisms.push_back({"id_" + o, o, o});
    identity.push_back(i);
  }
  return finish(std::move(objects), std::move(morphisms), std::move(identity), {});
}

FinCategory arrow_category() {
  return finish({"0", "1"},
                {{"id0", "0", "0"}, {"id1", "1", "1"}, {"a", "0", "1"}},
                {0, 1}, {});
}

FinCategory parallel_pair() {
  return finish({"0", "1"},
                {{"id0", "0", "0"}, {"id1", "1", "1"},
                 {"f", "0", "1"}, {"g", "0", "1"}},
                {0, 1}, {});
}

FinCategory cospan() {
  return finish({"0", "1", "2"},
                {{"id0", "0", "0"}, {"id1", "1", "1"}, {"id2", "2", "2"},
                 {"f", "0", "2"}, {"g", "1", "2"}},
                {0, 1, 2}, {});
}

FinCategory square_poset() {
  // a → b, a → c, b → d, c → d and the common diagonal a → d.
  return finish({"a", "b", "c", "d"},
                {{"ida", "a", "a"}, {"idb", "b", "b"}, {"idc", "c", "c"},
                 {"idd", "d", "d"}, {"ab", "a", "b"}, {"ac", "a", "c"},
                 {"bd", "b", "d"}, {"cd", "c", "d"}, {"ad", "a", "d"}},
                {0, 1, 2, 3},
                {{{6, 4, 8}},   // bd ∘ ab = ad
                 {{7, 5, 8}}}); // cd ∘ ac = ad
}

FinCategory bz(std::size_t n) {
  std::vector<std::string> names{"e"};
  for (std::size_t i = 1; i < n; ++i)
    names.push_back(i == 1 ? "t" : "t" + std::to_string(i));
  FinGroup zn = cyclic(n);
  zn.elements = std::move(names);
  return delooping(zn);
}

FinCategory delooping(const grp::FinGroup& g) {
  std::vector<MorDecl> morphisms;
  for (const auto& e : g.elements) morphisms.push_back({e, "*", "*"});
  FinCategory c;
  c.objects = {"*"};
  c.morphisms = std::move(morphisms);
  c.identity = {g.unit};
  std::size_t n = g.order();
  c.compose_table.assign(n, std::vector<std::size_t>(n, cat::npos));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) c.compose_table[a][b] = g.op(a, b);
  return c;
}

}  // namespace isokit::catalog
