#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "isokit/catalog.hpp"
#include "isokit/freeword.hpp"

using namespace isokit;
using fp::Syllable;
using fp::Word;

TEST_CASE("normal forms merge adjacent syllables and drop units") {
  grp::FinGroup s3 = catalog::sym3();
  std::size_t r = *s3.element("r"), r2 = *s3.element("r2"),
              s = *s3.element("s");

  // r · r2 collapses to the empty word.
  Word w{{Syllable::group(r), Syllable::group(r2)}};
  CHECK(fp::normalize(s3, w).empty());

  // r · x · x⁻¹ · s collapses to the single element rs.
  Word v{{Syllable::group(r), Syllable::x(0, 1), Syllable::x(0, -1),
          Syllable::group(s)}};
  Word nv = fp::normalize(s3, v);
  REQUIRE(nv.length() == 1);
  CHECK(nv.syl[0].kind == Syllable::Kind::Group);
  CHECK(nv.syl[0].elem == *s3.element("rs"));

  // x² stays put; unit group elements vanish.
  Word u{{Syllable::x(0, 1), Syllable::group(s3.unit), Syllable::x(0, 1)}};
  Word nu = fp::normalize(s3, u);
  REQUIRE(nu.length() == 1);
  CHECK(nu.syl[0].exp == 2);
}

TEST_CASE("concatenation, inverse and power obey group laws in the free product") {
  grp::FinGroup s3 = catalog::sym3();
  Word w = fp::conjugation_word(s3, *s3.element("r"));
  CHECK(fp::concat(s3, w, fp::word_inverse(s3, w)).empty());
  CHECK(fp::word_power(s3, w, 0).empty());
  CHECK(fp::word_power(s3, w, 3) ==
        fp::concat(s3, w, fp::concat(s3, w, w)));
  CHECK(fp::word_inverse(s3, fp::word_inverse(s3, w)) == w);
}

TEST_CASE("substituting one conjugation into another composes conjugators") {
  grp::FinGroup s3 = catalog::sym3();
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Word wa = fp::conjugation_word(s3, a);
      Word wb = fp::conjugation_word(s3, b);
      Word sub = fp::substitute(s3, wa, 0, wb);
      CHECK(sub == fp::conjugation_word(s3, s3.op(a, b)));
    }
}

TEST_CASE("generic commutation screens") {
  grp::FinGroup s3 = catalog::sym3();
  std::size_t r = *s3.element("r");

  Word conj = fp::conjugation_word(s3, r);
  CHECK(fp::commutes_unit(s3, conj));
  CHECK(fp::commutes_mul(s3, conj));
  CHECK(fp::commutes_inv(s3, conj));

  // x² respects the unit and inversion but not multiplication.
  Word xx{{Syllable::x(0, 2)}};
  CHECK(fp::commutes_unit(s3, xx));
  CHECK(fp::commutes_inv(s3, xx));
  CHECK(!fp::commutes_mul(s3, xx));

  // A stray left factor already fails the unit check.
  Word rx{{Syllable::group(r), Syllable::x(0, 1)}};
  CHECK(!fp::commutes_unit(s3, rx));
}

TEST_CASE("substitution inverses exist exactly for conjugations") {
  grp::FinGroup s3 = catalog::sym3();
  std::size_t r = *s3.element("r");
  auto inv = fp::invert_word(s3, fp::conjugation_word(s3, r));
  REQUIRE(inv.has_value());
  CHECK(*inv == fp::conjugation_word(s3, s3.inverse(r)));

  Word xx{{Syllable::x(0, 2)}};
  CHECK(!fp::invert_word(s3, xx).has_value());
}

TEST_CASE("isotropy search returns exactly the conjugation words") {
  for (const auto& g : {catalog::sym3(), catalog::cyclic(4),
                        catalog::cyclic(6), catalog::dihedral(4),
                        catalog::klein4(), catalog::trivial_group()}) {
    fp::IsotropySearchResult res = fp::isotropy_search(g, 3);
    CHECK(res.max_len == 3);
    CHECK(res.elements.size() == g.order());
    std::set<Word> found, expected;
    for (const auto& e : res.elements) {
      found.insert(e.word);
      CHECK(e.invertible);
      CHECK(e.commutes_mul);
      CHECK(e.commutes_unit);
      CHECK(e.commutes_inv);
    }
    for (std::size_t a = 0; a < g.order(); ++a)
      expected.insert(fp::conjugation_word(g, a));
    CHECK(found == expected);
  }
}

TEST_CASE("the search includes the identity substitution and stays faithful") {
  grp::FinGroup z4 = catalog::cyclic(4);
  fp::IsotropySearchResult res = fp::isotropy_search(z4, 3);
  Word plain_x{{Syllable::x(0, 1)}};
  bool has_x = false;
  for (const auto& e : res.elements) has_x = has_x || e.word == plain_x;
  CHECK(has_x);
  // Conjugation in the free extension separates elements even though Z4 is
  // abelian: the four survivors are pairwise distinct words.
  REQUIRE(res.elements.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = i + 1; k < 4; ++k)
      CHECK(res.elements[i].word != res.elements[k].word);
}

TEST_CASE("parallel search agrees with the sequential one") {
  grp::FinGroup d4 = catalog::dihedral(4);
  fp::IsotropySearchResult seq = fp::isotropy_search(d4, 3, 1);
  fp::IsotropySearchResult par = fp::isotropy_search(d4, 3, 4);
  REQUIRE(seq.elements.size() == par.elements.size());
  for (std::size_t i = 0; i < seq.elements.size(); ++i)
    CHECK(seq.elements[i].word == par.elements[i].word);
}

TEST_CASE("rendering") {
  grp::FinGroup s3 = catalog::sym3();
  CHECK(fp::show(s3, fp::conjugation_word(s3, *s3.element("r"))) == "r*x*r2");
  CHECK(fp::show(s3, fp::conjugation_word(s3, s3.unit)) == "x");
}
