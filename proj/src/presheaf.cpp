#include "isokit/presheaf.hpp"

#include <algorithm>

namespace isokit::psh {

ValidationReport check_presheaf(const GroupPresheaf& f) {
  ValidationReport r = check_category(f.base);
  if (!r.ok()) return r;
  const auto& c = f.base;
  if (f.groups.size() != c.objects.size()) {
    r.add("presheaf", "one group required per object");
    return r;
  }
  for (std::size_t o = 0; o < c.objects.size(); ++o) {
    ValidationReport gr = check_group(f.groups[o]);
    for (auto& i : gr.issues)
      r.add(i.law, "group at " + c.objects[o] + ": " + i.detail);
  }
  if (f.action.size() != c.morphisms.size()) {
    r.add("presheaf", "one map required per morphism");
    return r;
  }
  if (!r.ok()) return r;
  for (std::size_t m = 0; m < c.morphisms.size(); ++m) {
    const auto& src = f.groups[c.dom(m)];
    const auto& tgt = f.groups[c.cod(m)];
    ValidationReport hr = check_hom(src, tgt, f.action[m]);
    for (auto& i : hr.issues)
      r.add("functoriality", "F(" + c.morphisms[m].name + "): " + i.detail);
  }
  if (!r.ok()) return r;
  for (std::size_t o = 0; o < c.objects.size(); ++o)
    if (f.action[c.identity[o]] != grp::identity_map(f.groups[o].order()))
      r.add("functoriality",
            "F(id_" + c.objects[o] + ") is not the identity map");
  for (std::size_t g = 0; g < c.morphisms.size(); ++g)
    for (std::size_t h = 0; h < c.morphisms.size(); ++h) {
      if (!c.composable(g, h)) continue;
      if (f.action[c.compose(g, h)] !=
          grp::compose_maps(f.action[g], f.action[h]))
        r.add("functoriality", "F(" + c.morphisms[g].name + "∘" +
                                   c.morphisms[h].name + ") ≠ F(" +
                                   c.morphisms[g].name + ")∘F(" +
                                   c.morphisms[h].name + ")");
    }
  return r;
}

ValidationReport check_nat_trans(const NatTrans& t) {
  ValidationReport r;
  if (!t.src || !t.tgt) {
    r.add("naturality", "missing source or target presheaf");
    return r;
  }
  const auto& c = t.src->base;
  if (t.component.size() != c.objects.size()) {
    r.add("naturality", "one component required per object");
    return r;
  }
  for (std::size_t o = 0; o < c.objects.size(); ++o) {
    ValidationReport hr =
        check_hom(t.src->groups[o], t.tgt->groups[o], t.component[o]);
    for (auto& i : hr.issues)
      r.add("naturality", "component at " + c.objects[o] + ": " + i.detail);
  }
  if (!r.ok()) return r;
  for (std::size_t m = 0; m < c.morphisms.size(); ++m) {
    auto lhs = grp::compose_maps(t.component[c.cod(m)], t.src->action[m]);
    auto rhs = grp::compose_maps(t.tgt->action[m], t.component[c.dom(m)]);
    if (lhs != rhs)
      r.add("naturality",
            "square at " + c.morphisms[m].name + " does not commute");
  }
  return r;
}

NatTrans compose(const NatTrans& g, const NatTrans& f) {
  NatTrans out;
  out.src = f.src;
  out.tgt = g.tgt;
  out.component.reserve(f.component.size());
  for (std::size_t o = 0; o < f.component.size(); ++o)
    out.component.push_back(grp::compose_maps(g.component[o], f.component[o]));
  return out;
}

std::vector<NatTrans> nat_auts(const GroupPresheaf& f) {
  const auto& c = f.base;
  std::vector<std::vector<grp::ElemMap>> auts;
  auts.reserve(c.objects.size());
  for (std::size_t o = 0; o < c.objects.size(); ++o)
    auts.push_back(grp::automorphism_group(f.groups[o]));

  std::vector<NatTrans> out;
  // Extend object by object, keeping only partial families whose naturality
  // squares (between already-assigned objects) commute.
  struct Frame { std::vector<grp::ElemMap> comps; };
  std::vector<Frame> frames{{{}}};
  for (std::size_t o = 0; o < c.objects.size(); ++o) {
    std::vector<Frame> next;
    for (const auto& fr : frames)
      for (const auto& a : auts[o]) {
        bool ok = true;
        for (std::size_t m = 0; m < c.morphisms.size() && ok; ++m) {
          std::size_t d = c.dom(m), e = c.cod(m);
          if (d > o || e > o) continue;
          if (d != o && e != o) continue;  // checked at an earlier level
          const grp::ElemMap& cd = d == o ? a : fr.comps[d];
          const grp::ElemMap& ce = e == o ? a : fr.comps[e];
          ok = grp::compose_maps(ce, f.action[m]) ==
               grp::compose_maps(f.action[m], cd);
        }
        if (!ok) continue;
        Frame nf = fr;
        nf.comps.push_back(a);
        next.push_back(std::move(nf));
      }
    frames = std::move(next);
  }
  out.reserve(frames.size());
  for (auto& fr : frames) {
    NatTrans t;
    t.src = &f;
    t.tgt = &f;
    t.component = std::move(fr.comps);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const NatTrans& a, const NatTrans& b) {
    return a.component < b.component;
  });
  return out;
}

std::vector<std::vector<std::size_t>> limit_of_diagram(const GroupPresheaf& f) {
  const auto& c = f.base;
  std::vector<std::vector<std::size_t>> out;
  if (c.objects.empty()) {
    out.push_back({});
    return out;
  }
  std::vector<std::size_t> tuple(c.objects.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t m = 0; m < c.morphisms.size() && ok; ++m)
      ok = f.action[m][tuple[c.dom(m)]] == tuple[c.cod(m)];
    if (ok) out.push_back(tuple);
    std::size_t i = tuple.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++tuple[i] < f.groups[i].order()) {
        done = false;
        break;
      }
      tuple[i] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

grp::FinGroup limit_group(const GroupPresheaf& f) {
  auto tuples = limit_of_diagram(f);
  auto index_of = [&](const std::vector<std::size_t>& t) {
    return static_cast<std::size_t>(
        std::lower_bound(tuples.begin(), tuples.end(), t) - tuples.begin());
  };
  grp::FinGroup g;
  for (const auto& t : tuples) {
    std::string name;
    for (std::size_t o = 0; o < t.size(); ++o) {
      if (o) name += '|';
      name += f.groups[o].elements[t[o]];
    }
    if (t.empty()) name = "()";
    g.elements.push_back(name);
  }
  std::vector<std::size_t> unit_tuple;
  for (const auto& grp_ : f.groups) unit_tuple.push_back(grp_.unit);
  g.unit = index_of(unit_tuple);
  g.mul.assign(tuples.size(), std::vector<std::size_t>(tuples.size(), 0));
  g.inv.assign(tuples.size(), 0);
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    for (std::size_t b = 0; b < tuples.size(); ++b) {
      std::vector<std::size_t> prod(tuples[a].size());
      for (std::size_t o = 0; o < prod.size(); ++o)
        prod[o] = f.groups[o].op(tuples[a][o], tuples[b][o]);
      g.mul[a][b] = index_of(prod);
    }
    std::vector<std::size_t> ainv(tuples[a].size());
    for (std::size_t o = 0; o < ainv.size(); ++o)
      ainv[o] = f.groups[o].inverse(tuples[a][o]);
    g.inv[a] = index_of(ainv);
  }
  return g;
}

}  // namespace isokit::psh
