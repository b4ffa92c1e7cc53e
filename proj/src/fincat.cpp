#include "isokit/fincat.hpp"

#include <algorithm>
#include <set>

namespace isokit::cat {

std::optional<std::size_t> FinCategory::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> FinCategory::morphism_index(const std::string& name) const {
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].name == name) return i;
  return std::nullopt;
}

std::size_t FinCategory::dom(std::size_t m) const {
  return *object_index(morphisms[m].dom);
}

std::size_t FinCategory::cod(std::size_t m) const {
  return *object_index(morphisms[m].cod);
}

bool FinCategory::composable(std::size_t g, std::size_t f) const {
  return cod(f) == dom(g);
}

std::size_t FinCategory::compose(std::size_t g, std::size_t f) const {
  return compose_table[g][f];
}

std::vector<std::size_t> FinCategory::endos(std::size_t obj) const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < morphisms.size(); ++m)
    if (dom(m) == obj && cod(m) == obj) out.push_back(m);
  return out;
}

std::optional<std::size_t> FinCategory::inverse(std::size_t m) const {
  std::size_t d = dom(m), c = cod(m);
  for (std::size_t n = 0; n < morphisms.size(); ++n) {
    if (dom(n) != c || cod(n) != d) continue;
    if (compose(n, m) == identity[d] && compose(m, n) == identity[c]) return n;
  }
  return std::nullopt;
}

std::size_t FinCategory::composable_pairs() const {
  std::size_t n = 0;
  for (std::size_t g = 0; g < morphisms.size(); ++g)
    for (std::size_t f = 0; f < morphisms.size(); ++f)
      if (composable(g, f)) ++n;
  return n;
}

ValidationReport check_category(const FinCategory& c) {
  ValidationReport r;
  std::set<std::string> onames(c.objects.begin(), c.objects.end());
  if (onames.size() != c.objects.size()) r.add("category", "duplicate object name");
  std::set<std::string> mnames;
  for (const auto& m : c.morphisms) {
    if (!mnames.insert(m.name).second)
      r.add("category", "duplicate morphism name " + m.name);
    if (!c.object_index(m.dom))
      r.add("typing", m.name + " has unknown domain " + m.dom);
    if (!c.object_index(m.cod))
      r.add("typing", m.name + " has unknown codomain " + m.cod);
  }
  if (!r.ok()) return r;  // later checks assume resolvable names

  if (c.identity.size() != c.objects.size()) {
    r.add("identity", "identity assignment incomplete");
    return r;
  }
  for (std::size_t o = 0; o < c.objects.size(); ++o) {
    std::size_t id = c.identity[o];
    if (id >= c.morphisms.size() || c.dom(id) != o || c.cod(id) != o)
      r.add("identity", "identity of " + c.objects[o] + " is not an endomorphism");
  }
  if (c.compose_table.size() != c.morphisms.size()) {
    r.add("typing", "composition table has wrong number of rows");
    return r;
  }
  for (std::size_t g = 0; g < c.morphisms.size(); ++g) {
    if (c.compose_table[g].size() != c.morphisms.size()) {
      r.add("typing", "composition table row for " + c.morphisms[g].name +
                          " has wrong length");
      return r;
    }
    for (std::size_t f = 0; f < c.morphisms.size(); ++f) {
      std::size_t gf = c.compose_table[g][f];
      if (!c.composable(g, f)) {
        if (gf != npos)
          r.add("typing", "table defines " + c.morphisms[g].name + "∘" +
                              c.morphisms[f].name + " on non-composable pair");
        continue;
      }
      if (gf == npos) {
        r.add("typing", "missing composite " + c.morphisms[g].name + "∘" +
                            c.morphisms[f].name);
        continue;
      }
      if (gf >= c.morphisms.size() || c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g))
        r.add("typing", "composite " + c.morphisms[g].name + "∘" +
                            c.morphisms[f].name + " has wrong endpoints");
    }
  }
  if (!r.ok()) return r;

  for (std::size_t f = 0; f < c.morphisms.size(); ++f) {
    std::size_t idc = c.identity[c.cod(f)], idd = c.identity[c.dom(f)];
    if (c.compose(idc, f) != f)
      r.add("identity", "id∘" + c.morphisms[f].name + " ≠ " + c.morphisms[f].name);
    if (c.compose(f, idd) != f)
      r.add("identity", c.morphisms[f].name + "∘id ≠ " + c.morphisms[f].name);
  }
  for (std::size_t h = 0; h < c.morphisms.size(); ++h)
    for (std::size_t g = 0; g < c.morphisms.size(); ++g) {
      if (!c.composable(h, g)) continue;
      for (std::size_t f = 0; f < c.morphisms.size(); ++f) {
        if (!c.composable(g, f)) continue;
        std::size_t left = c.compose(c.compose(h, g), f);
        std::size_t right = c.compose(h, c.compose(g, f));
        if (left != right)
          r.add("associativity",
                "(" + c.morphisms[h].name + "∘" + c.morphisms[g].name + ")∘" +
                    c.morphisms[f].name + " = " + c.morphisms[left].name +
                    " but " + c.morphisms[h].name + "∘(" + c.morphisms[g].name +
                    "∘" + c.morphisms[f].name + ") = " + c.morphisms[right].name);
      }
    }
  return r;
}

std::size_t IdAutGroup::index_of(const IdNatAut& a) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == a) return i;
  return npos;
}

namespace {

bool natural(const FinCategory& c, const std::vector<std::size_t>& comp) {
  // h∘ψ_dom(h) = ψ_cod(h)∘h for every morphism h.
  for (std::size_t h = 0; h < c.morphisms.size(); ++h) {
    std::size_t lhs = c.compose(h, comp[c.dom(h)]);
    std::size_t rhs = c.compose(comp[c.cod(h)], h);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace

IdAutGroup aut_identity_functor(const FinCategory& c) {
  std::vector<std::vector<std::size_t>> candidates;
  candidates.reserve(c.objects.size());
  for (std::size_t o = 0; o < c.objects.size(); ++o) {
    std::vector<std::size_t> iso_endos;
    for (std::size_t m : c.endos(o))
      if (c.inverse(m)) iso_endos.push_back(m);
    candidates.push_back(std::move(iso_endos));
  }
  IdAutGroup out;
  std::vector<std::size_t> comp(c.objects.size(), 0);
  std::vector<std::size_t> pick(c.objects.size(), 0);
  if (c.objects.empty()) {
    out.elements.push_back(IdNatAut{{}});
    return out;
  }
  while (true) {
    for (std::size_t o = 0; o < comp.size(); ++o) comp[o] = candidates[o][pick[o]];
    if (natural(c, comp)) out.elements.push_back(IdNatAut{comp});
    std::size_t i = comp.size();
    while (i > 0) {
      --i;
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
      if (i == 0) {
        std::sort(out.elements.begin(), out.elements.end());
        return out;
      }
    }
  }
}

IdNatAut compose(const FinCategory& c, const IdNatAut& g, const IdNatAut& f) {
  IdNatAut out;
  out.component.resize(c.objects.size());
  for (std::size_t o = 0; o < c.objects.size(); ++o)
    out.component[o] = c.compose(g.component[o], f.component[o]);
  return out;
}

IdNatAut invert(const FinCategory& c, const IdNatAut& a) {
  IdNatAut out;
  out.component.resize(c.objects.size());
  for (std::size_t o = 0; o < c.objects.size(); ++o)
    out.component[o] = *c.inverse(a.component[o]);
  return out;
}

IdNatAut identity_aut(const FinCategory& c) {
  IdNatAut out;
  out.component = c.identity;
  return out;
}

}  // namespace isokit::cat
