#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "isokit/catalog.hpp"
#include "isokit/fincat.hpp"
#include "isokit/fingroup.hpp"
#include "isokit/freeword.hpp"
#include "isokit/isotropy.hpp"
#include "isokit/phl.hpp"
#include "isokit/presheaf.hpp"

using namespace isokit;

namespace {

psh::NatTrans identity_trans(const psh::GroupPresheaf& f) {
  psh::NatTrans t;
  t.src = &f;
  t.tgt = &f;
  for (const auto& g : f.groups)
    t.component.push_back(grp::identity_map(g.order()));
  return t;
}

// All tuples over the component carriers, limit or not.
std::vector<std::vector<std::size_t>> all_tuples(const psh::GroupPresheaf& f) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (const auto& g : f.groups) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : out)
      for (std::size_t e = 0; e < g.order(); ++e) {
        next.push_back(t);
        next.back().push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("isotropy order is the limit size times the identity-functor auts") {
  const std::map<std::string, std::size_t> expected = {
      {"terminal_z3", 3},  {"terminal_s3", 6},  {"bz2_z3_inv", 2},
      {"bz2_z4_inv", 4},   {"bz2_s3_conj", 4},  {"arrow_z3_s3", 3},
      {"arrow_s3_z2", 6},  {"parpair_z4", 2},   {"parpair_s3", 3},
      {"cospan_z2_s3", 1}, {"discrete2_s3_s3", 36},
  };
  for (const auto& [name, f] : corpus::all()) {
    CAPTURE(name);
    iso::IsotropyGroup z = iso::isotropy_group(f);
    CHECK(z.order() == expected.at(name));
    CHECK(z.order() == psh::limit_of_diagram(f).size() *
                           cat::aut_identity_functor(f.base).order());
    CHECK(z.lim.size() * z.aut_id.order() == z.elements.size());
  }
}

TEST_CASE("elements are enumerated limit-major, aut-minor") {
  psh::GroupPresheaf f = corpus::bz2_z4_inv();
  iso::IsotropyGroup z = iso::isotropy_group(f);
  REQUIRE(z.order() == 4);
  std::size_t t = *f.base.morphism_index("t");
  CHECK(z.elements[0].g == std::vector<std::size_t>{0});
  CHECK(z.elements[0].psi == cat::identity_aut(f.base));
  CHECK(z.elements[1].g == std::vector<std::size_t>{0});
  CHECK(z.elements[1].psi.component == std::vector<std::size_t>{t});
  CHECK(z.elements[2].g == std::vector<std::size_t>{2});
  CHECK(z.elements[3].g == std::vector<std::size_t>{2});
  CHECK(z.identity() == z.elements[0]);
  for (std::size_t i = 0; i < z.order(); ++i)
    CHECK(z.index_of(z.elements[i]) == i);
}

TEST_CASE("the isotropy group satisfies the group laws") {
  psh::GroupPresheaf f = corpus::bz2_s3_conj();
  iso::IsotropyGroup z = iso::isotropy_group(f);
  REQUIRE(z.order() == 4);
  iso::ExtendedInnerAut id = z.identity();
  CHECK(z.index_of(id) != cat::npos);
  for (const auto& a : z.elements) {
    CHECK(z.mul(a, id) == a);
    CHECK(z.mul(id, a) == a);
    CHECK(z.mul(a, z.inverse(a)) == id);
    CHECK(z.mul(z.inverse(a), a) == id);
    for (const auto& b : z.elements) {
      CHECK(z.index_of(z.mul(a, b)) != cat::npos);
      for (const auto& c : z.elements)
        CHECK(z.mul(z.mul(a, b), c) == z.mul(a, z.mul(b, c)));
    }
  }
}

TEST_CASE("evaluation along the identity recovers the twisted conjugations") {
  psh::GroupPresheaf f = corpus::bz2_s3_conj();
  grp::FinGroup s3 = catalog::sym3();
  psh::NatTrans id_f = identity_trans(f);
  std::size_t s = *s3.element("s");
  std::size_t t = *f.base.morphism_index("t");

  iso::ExtendedInnerAut conj_by_s{&f, {s}, cat::identity_aut(f.base)};
  CHECK(iso::evaluate_at(conj_by_s, id_f, 0) == grp::inn(s3, s));

  // a trivial conjugator twisted by psi = t lands on the same table: the two
  // extended pairs are distinct yet evaluate identically on id_F
  iso::ExtendedInnerAut twist{&f, {s3.unit}, {{t}}};
  CHECK(iso::evaluate_at(twist, id_f, 0) == grp::inn(s3, s));
  CHECK(!(twist == conj_by_s));

  // over the one-object trivial category the evaluation is plain conjugation
  psh::GroupPresheaf fs3 = corpus::terminal_s3();
  psh::NatTrans id_s3 = identity_trans(fs3);
  std::size_t r = *s3.element("r");
  iso::ExtendedInnerAut conj_by_r{&fs3, {r}, cat::identity_aut(fs3.base)};
  CHECK(iso::evaluate_at(conj_by_r, id_s3, 0) == grp::inn(s3, r));

  // evaluating along a transformation into an abelian target collapses the
  // conjugation part entirely
  psh::GroupPresheaf fz2 =
      corpus::make(catalog::terminal_category(), {catalog::cyclic(2)}, {});
  psh::NatTrans sgn;
  sgn.src = &fs3;
  sgn.tgt = &fz2;
  sgn.component = {corpus::sign_s3()};
  REQUIRE(psh::check_nat_trans(sgn).ok());
  CHECK(iso::evaluate_at(conj_by_r, sgn, 0) == grp::identity_map(2));

  // transformations out of a different presheaf are rejected
  CHECK_THROWS_AS(iso::evaluate_at(conj_by_s, id_s3, 0), phl::InputError);
}

TEST_CASE("inner witness oracles") {
  grp::FinGroup z3 = catalog::cyclic(3);
  grp::FinGroup s3 = catalog::sym3();

  // inversion on an abelian component is an automorphism but never inner
  psh::GroupPresheaf fz3 = corpus::terminal_z3();
  psh::NatTrans inv_pi;
  inv_pi.src = &fz3;
  inv_pi.tgt = &fz3;
  inv_pi.component = {z3.inv};
  CHECK(iso::inner_witnesses(fz3, inv_pi).empty());

  // conjugation by r on S3 has the unique witness (r, id): the center is
  // trivial, so the conjugator is pinned down
  psh::GroupPresheaf fs3 = corpus::terminal_s3();
  psh::NatTrans pi_r;
  pi_r.src = &fs3;
  pi_r.tgt = &fs3;
  pi_r.component = {grp::inn(s3, *s3.element("r"))};
  auto w_r = iso::inner_witnesses(fs3, pi_r);
  REQUIRE(w_r.size() == 1);
  CHECK(w_r[0].g == std::vector<std::size_t>{*s3.element("r")});
  CHECK(w_r[0].psi == cat::identity_aut(fs3.base));

  // over BZ2 acting by inversion, inversion itself becomes inner with a
  // trivial conjugator and the nontrivial twist
  psh::GroupPresheaf fb = corpus::bz2_z3_inv();
  std::size_t t = *fb.base.morphism_index("t");
  psh::NatTrans pi_inv;
  pi_inv.src = &fb;
  pi_inv.tgt = &fb;
  pi_inv.component = {z3.inv};
  auto w_inv = iso::inner_witnesses(fb, pi_inv);
  REQUIRE(w_inv.size() == 1);
  CHECK(w_inv[0].g == std::vector<std::size_t>{0});
  CHECK(w_inv[0].psi.component == std::vector<std::size_t>{t});

  // with a nonabelian component both the conjugator and the twist can move
  psh::GroupPresheaf fc = corpus::bz2_s3_conj();
  std::size_t tc = *fc.base.morphism_index("t");
  std::size_t s = *s3.element("s");
  psh::NatTrans pi_s;
  pi_s.src = &fc;
  pi_s.tgt = &fc;
  pi_s.component = {grp::inn(s3, s)};
  auto w_s = iso::inner_witnesses(fc, pi_s);
  REQUIRE(w_s.size() == 2);
  CHECK(w_s[0].g == std::vector<std::size_t>{s3.unit});
  CHECK(w_s[0].psi.component == std::vector<std::size_t>{tc});
  CHECK(w_s[1].g == std::vector<std::size_t>{s});
  CHECK(w_s[1].psi == cat::identity_aut(fc.base));

  psh::NatTrans id_fc = identity_trans(fc);
  auto w_id = iso::inner_witnesses(fc, id_fc);
  REQUIRE(w_id.size() == 2);
  CHECK(w_id[0].g == std::vector<std::size_t>{s3.unit});
  CHECK(w_id[0].psi == cat::identity_aut(fc.base));
  CHECK(w_id[1].g == std::vector<std::size_t>{s});
  CHECK(w_id[1].psi.component == std::vector<std::size_t>{tc});

  // every witness reproduces pi when packaged and evaluated
  for (const auto& w : w_s) {
    iso::ExtendedInnerAut e{&fc, w.g, w.psi};
    CHECK(iso::evaluate_at(e, id_fc, 0) == pi_s.component[0]);
  }

  // candidates must be natural automorphism families
  psh::NatTrans collapse;
  collapse.src = &fs3;
  collapse.tgt = &fs3;
  collapse.component = {grp::ElemMap(6, s3.unit)};
  CHECK_THROWS_AS(iso::inner_witnesses(fs3, collapse), phl::InputError);

  psh::GroupPresheaf fa = corpus::arrow_z3_s3();
  psh::NatTrans skew;
  skew.src = &fa;
  skew.tgt = &fa;
  skew.component = {grp::identity_map(3), grp::inn(s3, s)};
  CHECK_THROWS_AS(iso::inner_witnesses(fa, skew), phl::InputError);
}

TEST_CASE("conjugator compatibility coincides with limit membership") {
  for (const auto& name : {"bz2_z3_inv", "bz2_s3_conj", "parpair_z4",
                           "arrow_s3_z2", "cospan_z2_s3", "discrete2_s3_s3"}) {
    CAPTURE(name);
    psh::GroupPresheaf f;
    for (auto& [n, g] : corpus::all())
      if (n == name) f = g;
    auto lim = psh::limit_of_diagram(f);
    auto is_limit = [&](const std::vector<std::size_t>& t) {
      return std::find(lim.begin(), lim.end(), t) != lim.end();
    };
    for (const auto& tuple : all_tuples(f)) {
      iso::CompatibilityReport rep = iso::check_general_char(f, tuple);
      CHECK(rep.compatible == is_limit(tuple));
      CHECK(rep.violation.has_value() == !rep.compatible);
    }
  }
}

TEST_CASE("incompatibility is witnessed by distinct conjugation words") {
  grp::FinGroup z3 = catalog::cyclic(3);
  psh::GroupPresheaf fb = corpus::bz2_z3_inv();
  iso::CompatibilityReport rep = iso::check_general_char(fb, {1});
  REQUIRE(!rep.compatible);
  REQUIRE(rep.violation.has_value());
  CHECK(rep.violation->mor == *fb.base.morphism_index("t"));
  CHECK(rep.violation->lhs == fp::conjugation_word(z3, 1));
  CHECK(rep.violation->rhs == fp::conjugation_word(z3, 2));
  CHECK(rep.violation->lhs != rep.violation->rhs);

  psh::GroupPresheaf fc = corpus::cospan_z2_s3();
  grp::FinGroup sym = catalog::sym3();
  iso::CompatibilityReport rc = iso::check_general_char(fc, {1, 0, 0});
  REQUIRE(!rc.compatible);
  CHECK(rc.violation->mor == *fc.base.morphism_index("f"));
  CHECK(rc.violation->lhs == fp::conjugation_word(sym, sym.unit));
  CHECK(rc.violation->rhs == fp::conjugation_word(sym, *sym.element("s")));

  CHECK_THROWS_AS(iso::check_general_char(fb, {0, 0}), phl::InputError);
}

TEST_CASE("probes act by conjugation in the free product") {
  psh::GroupPresheaf f = corpus::bz2_s3_conj();
  grp::FinGroup s3 = catalog::sym3();
  std::size_t s = *s3.element("s"), r = *s3.element("r");
  fp::Word x{{fp::Syllable::x(0, 1)}};

  iso::ExtendedInnerAut e{&f, {s}, cat::identity_aut(f.base)};
  CHECK(iso::probe_apply(e, 0, x) == fp::conjugation_word(s3, s));
  CHECK(iso::probe_apply(e, 0, fp::conjugation_word(s3, r)) ==
        fp::conjugation_word(s3, s3.op(s, r)));

  iso::IsotropyGroup z = iso::isotropy_group(f);
  iso::ExtendedInnerAut id = z.identity();
  CHECK(iso::probe_apply(id, 0, x) == x);
  // probing is multiplicative in the conjugator
  for (const auto& a : z.elements)
    for (const auto& b : z.elements) {
      fp::Word chained = iso::probe_apply(a, 0, iso::probe_apply(b, 0, x));
      CHECK(chained == iso::probe_apply(z.mul(a, b), 0, x));
      CHECK(chained == fp::conjugation_word(s3, s3.op(a.g[0], b.g[0])));
    }
}

TEST_CASE("extended pairs are coherent over transformation slices") {
  for (const auto& name : {"bz2_s3_conj", "arrow_z3_s3"}) {
    CAPTURE(name);
    psh::GroupPresheaf f;
    for (auto& [n, g] : corpus::all())
      if (n == name) f = g;
    iso::CoherenceSlice slice = iso::default_slice(f);
    for (const auto& e : iso::isotropy_group(f).elements)
      CHECK(iso::check_coherence(e, slice).ok);
  }

  // a slice with a nontrivial arrow between two legs
  psh::GroupPresheaf f = corpus::bz2_s3_conj();
  auto auts = psh::nat_auts(f);
  REQUIRE(auts.size() == 2);
  psh::NatTrans id_f = identity_trans(f);
  psh::NatTrans phi = auts[1];
  iso::CoherenceSlice slice;
  slice.legs = {id_f, phi};
  slice.arrows.push_back({0, phi, 1});
  iso::IsotropyGroup z = iso::isotropy_group(f);
  for (const auto& e : z.elements) CHECK(iso::check_coherence(e, slice).ok);

  // corrupting one evaluated table breaks coherence, and the report says so
  grp::FinGroup s3 = catalog::sym3();
  const auto& e = z.elements[z.order() - 1];
  std::vector<std::vector<grp::ElemMap>> family;
  for (std::size_t leg = 0; leg < slice.legs.size(); ++leg)
    family.push_back({iso::evaluate_at(e, slice.legs[leg], 0)});
  CHECK(iso::check_family_coherence(slice, family).ok);
  family[1][0] = grp::inn(s3, *s3.element("r"));
  iso::CoherenceReport bad = iso::check_family_coherence(slice, family);
  CHECK(!bad.ok);
  CHECK(!bad.detail.empty());

  // family shape and slice composability are validated
  CHECK_THROWS_AS(iso::check_family_coherence(slice, {family[0]}),
                  phl::InputError);
  iso::CoherenceSlice skew;
  skew.legs = {id_f, id_f};
  skew.arrows.push_back({0, phi, 1});
  CHECK_THROWS_AS(iso::check_coherence(z.identity(), skew), phl::InputError);
}

TEST_CASE("evaluation is a homomorphism into natural automorphisms") {
  for (const auto& name : {"bz2_s3_conj", "arrow_z3_s3", "terminal_s3"}) {
    CAPTURE(name);
    psh::GroupPresheaf f;
    for (auto& [n, g] : corpus::all())
      if (n == name) f = g;
    psh::NatTrans id_f = identity_trans(f);
    iso::IsotropyGroup z = iso::isotropy_group(f);
    std::size_t objs = f.base.objects.size();

    auto family = [&](const iso::ExtendedInnerAut& e) {
      psh::NatTrans nat;
      nat.src = &f;
      nat.tgt = &f;
      for (std::size_t k = 0; k < objs; ++k)
        nat.component.push_back(iso::evaluate_at(e, id_f, k));
      return nat;
    };

    for (const auto& e : z.elements) {
      psh::NatTrans nat = family(e);
      CHECK(psh::check_nat_trans(nat).ok());
      for (const auto& comp : nat.component) CHECK(grp::is_bijective(comp));
    }
    for (const auto& a : z.elements)
      for (const auto& b : z.elements) {
        psh::NatTrans lhs = family(z.mul(a, b));
        psh::NatTrans rhs = psh::compose(family(a), family(b));
        CHECK(lhs == rhs);
      }
  }
}
