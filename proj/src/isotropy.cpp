#include "isokit/isotropy.hpp"

#include <algorithm>

#include "isokit/phl.hpp"  // InputError

namespace isokit::iso {

using phl::InputError;

grp::ElemMap evaluate_at(const ExtendedInnerAut& e, const psh::NatTrans& mu,
                         std::size_t k) {
  if (!e.F || mu.src != e.F)
    throw InputError("transformation does not go out of the element's presheaf");
  const psh::GroupPresheaf& tgt = *mu.tgt;
  std::size_t conj = mu.component[k][e.g[k]];
  grp::ElemMap inner = grp::inn(tgt.groups[k], conj);
  const grp::ElemMap& moved = tgt.action[e.psi.component[k]];
  return grp::compose_maps(moved, inner);
}

fp::Word probe_apply(const ExtendedInnerAut& e, std::size_t obj,
                     const fp::Word& w) {
  const grp::FinGroup& g = e.F->groups[obj];
  // normalize: a unit conjugator must become the empty word, since concat
  // expects its operands in normal form
  fp::Word conj = fp::normalize(g, {{fp::Syllable::group(e.g[obj])}});
  return fp::concat(g, fp::concat(g, conj, w),
                    fp::word_inverse(g, conj));
}

CoherenceSlice default_slice(const psh::GroupPresheaf& f) {
  psh::NatTrans id;
  id.src = &f;
  id.tgt = &f;
  for (const auto& g : f.groups)
    id.component.push_back(grp::identity_map(g.order()));
  CoherenceSlice s;
  s.legs.push_back(id);
  s.arrows.push_back({0, id, 0});
  return s;
}

CoherenceReport check_family_coherence(
    const CoherenceSlice& slice,
    const std::vector<std::vector<grp::ElemMap>>& family) {
  if (family.size() != slice.legs.size())
    throw InputError("one component family required per slice leg");
  for (const auto& a : slice.arrows) {
    psh::NatTrans composite = psh::compose(a.nu, slice.legs[a.from]);
    if (!(composite == slice.legs[a.to]))
      throw InputError("slice is not composable: arrow does not land on its leg");
  }
  for (std::size_t ai = 0; ai < slice.arrows.size(); ++ai) {
    const auto& a = slice.arrows[ai];
    std::size_t objects = slice.legs[a.from].component.size();
    for (std::size_t k = 0; k < objects; ++k) {
      grp::ElemMap lhs = grp::compose_maps(a.nu.component[k], family[a.from][k]);
      grp::ElemMap rhs = grp::compose_maps(family[a.to][k], a.nu.component[k]);
      if (lhs != rhs) {
        CoherenceReport r;
        r.ok = false;
        r.detail = "square fails at arrow " + std::to_string(ai) +
                   ", object index " + std::to_string(k);
        return r;
      }
    }
  }
  return {};
}

CoherenceReport check_coherence(const ExtendedInnerAut& e,
                                const CoherenceSlice& slice) {
  std::vector<std::vector<grp::ElemMap>> family;
  family.reserve(slice.legs.size());
  for (const auto& leg : slice.legs) {
    std::vector<grp::ElemMap> comps;
    for (std::size_t k = 0; k < leg.component.size(); ++k)
      comps.push_back(evaluate_at(e, leg, k));
    family.push_back(std::move(comps));
  }
  return check_family_coherence(slice, family);
}

ExtendedInnerAut IsotropyGroup::identity() const {
  ExtendedInnerAut e;
  e.F = F;
  for (const auto& g : F->groups) e.g.push_back(g.unit);
  e.psi = cat::identity_aut(F->base);
  return e;
}

ExtendedInnerAut IsotropyGroup::mul(const ExtendedInnerAut& a,
                                    const ExtendedInnerAut& b) const {
  ExtendedInnerAut e;
  e.F = F;
  e.g.resize(a.g.size());
  for (std::size_t o = 0; o < a.g.size(); ++o)
    e.g[o] = F->groups[o].op(a.g[o], b.g[o]);
  e.psi = cat::compose(F->base, a.psi, b.psi);
  return e;
}

ExtendedInnerAut IsotropyGroup::inverse(const ExtendedInnerAut& a) const {
  ExtendedInnerAut e;
  e.F = F;
  e.g.resize(a.g.size());
  for (std::size_t o = 0; o < a.g.size(); ++o)
    e.g[o] = F->groups[o].inverse(a.g[o]);
  e.psi = cat::invert(F->base, a.psi);
  return e;
}

std::size_t IsotropyGroup::index_of(const ExtendedInnerAut& a) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == a) return i;
  return cat::npos;
}

IsotropyGroup isotropy_group(const psh::GroupPresheaf& f) {
  IsotropyGroup out;
  out.F = &f;
  out.lim = psh::limit_of_diagram(f);
  out.aut_id = cat::aut_identity_functor(f.base);
  for (const auto& tuple : out.lim)
    for (const auto& psi : out.aut_id.elements) {
      ExtendedInnerAut e;
      e.F = &f;
      e.g = tuple;
      e.psi = psi;
      out.elements.push_back(std::move(e));
    }
  return out;
}

std::vector<InnerWitness> inner_witnesses(const psh::GroupPresheaf& f,
                                          const psh::NatTrans& pi) {
  {
    ValidationReport nat = psh::check_nat_trans(pi);
    if (!nat.ok())
      throw InputError("candidate is not natural: " + nat.issues[0].detail);
    for (const auto& comp : pi.component)
      if (!grp::is_bijective(comp))
        throw InputError("candidate is not an automorphism family");
  }
  std::vector<InnerWitness> out;
  auto lim = psh::limit_of_diagram(f);
  auto auts = cat::aut_identity_functor(f.base);
  for (const auto& tuple : lim)
    for (const auto& psi : auts.elements) {
      bool match = true;
      for (std::size_t k = 0; k < f.base.objects.size() && match; ++k) {
        grp::ElemMap expect = grp::compose_maps(
            f.action[psi.component[k]], grp::inn(f.groups[k], tuple[k]));
        match = expect == pi.component[k];
      }
      if (match) out.push_back({tuple, psi});
    }
  return out;
}

CompatibilityReport check_general_char(const psh::GroupPresheaf& f,
                                       const std::vector<std::size_t>& g) {
  if (g.size() != f.base.objects.size())
    throw InputError("one conjugator required per object");
  CompatibilityReport out;
  for (std::size_t h = 0; h < f.base.morphisms.size(); ++h) {
    std::size_t i = f.base.dom(h), j = f.base.cod(h);
    fp::Word lhs = fp::conjugation_word(f.groups[j], g[j]);
    fp::Word rhs = fp::conjugation_word(f.groups[j], f.action[h][g[i]]);
    if (lhs != rhs) {
      out.compatible = false;
      out.violation = CompatibilityReport::Violation{h, lhs, rhs};
      return out;
    }
  }
  return out;
}

}  // namespace isokit::iso
