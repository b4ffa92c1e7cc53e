#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isokit/fincat.hpp"
#include "isokit/freeword.hpp"
#include "isokit/presheaf.hpp"

// Extended inner automorphisms of a group presheaf F: pairs of a limit
// element g and an automorphism ψ of the identity functor of the base
// category.  Evaluated at a transformation μ : F → G and an object k, the
// component is G(ψ(k)) ∘ inn(μ_k(g_k)); the whole isotropy group is the
// direct product lim F × Aut(Id).
//
// Free products enter through word probes: the component of an extended
// family along the embedding of F(k) into F(k)*⟨x⟩ is conjugation by the
// image of g_k, and comparing such words separates conjugators exactly
// (g·x·g⁻¹ = h·x·h⁻¹ in the free product only when g = h).

namespace isokit::iso {

struct ExtendedInnerAut {
  const psh::GroupPresheaf* F = nullptr;
  std::vector<std::size_t> g;  // limit tuple: element index per object
  cat::IdNatAut psi;

  bool operator==(const ExtendedInnerAut& o) const {
    return g == o.g && psi == o.psi;
  }
};

// Automorphism table of mu's target component at k.  mu must go out of e.F.
grp::ElemMap evaluate_at(const ExtendedInnerAut& e, const psh::NatTrans& mu,
                         std::size_t k);

// Action of e on the free extension of the component at obj: w ↦ ĝ·w·ĝ⁻¹
// with ĝ the image of g_obj.
fp::Word probe_apply(const ExtendedInnerAut& e, std::size_t obj,
                     const fp::Word& w);

// A finite diagram of transformations out of F: legs μ_i : F → G_i plus
// arrows ν with ν ∘ legs[from] = legs[to].
struct CoherenceSlice {
  std::vector<psh::NatTrans> legs;
  struct Arrow {
    std::size_t from;
    psh::NatTrans nu;
    std::size_t to;
  };
  std::vector<Arrow> arrows;
};

// {id_F} with its trivial arrow.  Free-product probes are not finite
// presheaf morphisms and are exercised separately through probe_apply and
// check_general_char.
CoherenceSlice default_slice(const psh::GroupPresheaf& f);

struct CoherenceReport {
  bool ok = true;
  std::string detail;
};

// family[leg][k]: an automorphism table of the leg's target at k.  Checks
// ν_k ∘ family[from][k] = family[to][k] ∘ ν_k on every arrow and object.
CoherenceReport check_family_coherence(
    const CoherenceSlice& slice,
    const std::vector<std::vector<grp::ElemMap>>& family);

CoherenceReport check_coherence(const ExtendedInnerAut& e,
                                const CoherenceSlice& slice);

struct IsotropyGroup {
  const psh::GroupPresheaf* F = nullptr;
  std::vector<std::vector<std::size_t>> lim;
  cat::IdAutGroup aut_id;
  std::vector<ExtendedInnerAut> elements;  // limit-major, Aut(Id)-minor

  std::size_t order() const { return elements.size(); }
  ExtendedInnerAut identity() const;
  ExtendedInnerAut mul(const ExtendedInnerAut& a,
                       const ExtendedInnerAut& b) const;
  ExtendedInnerAut inverse(const ExtendedInnerAut& a) const;
  std::size_t index_of(const ExtendedInnerAut& a) const;
};

IsotropyGroup isotropy_group(const psh::GroupPresheaf& f);

struct InnerWitness {
  std::vector<std::size_t> g;
  cat::IdNatAut psi;
};

// All (g, ψ) with π(k) = F(ψ(k)) ∘ inn(g_k) for every k; empty when π is
// not an extended inner automorphism.  π must be a natural automorphism.
std::vector<InnerWitness> inner_witnesses(const psh::GroupPresheaf& f,
                                          const psh::NatTrans& pi);

struct CompatibilityReport {
  bool compatible = true;
  struct Violation {
    std::size_t mor;   // morphism h : i → j witnessing failure
    fp::Word lhs, rhs; // g_j·x·g_j⁻¹ vs F(h)(g_i)·x·F(h)(g_i)⁻¹ over F(j)
  };
  std::optional<Violation> violation;
};

// Compatibility of the per-object conjugation families (inn(g_i))_i, decided
// through separating homs into the free products F(j)*⟨x⟩; compatible
// exactly when (g_i) is a limit tuple.
CompatibilityReport check_general_char(const psh::GroupPresheaf& f,
                                       const std::vector<std::size_t>& g);

}  // namespace isokit::iso
