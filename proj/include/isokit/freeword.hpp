#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isokit/fingroup.hpp"

// Normal-form words in the free product G * F(x0, x1, ...): alternating
// non-unit elements of G and non-zero indeterminate powers, with adjacent
// syllables of the same kind merged.  The empty word is the unit.

namespace isokit::fp {

struct Syllable {
  enum class Kind { Group, Ind };
  Kind kind = Kind::Group;
  std::size_t elem = 0;  // Group: element index in G
  std::size_t ind = 0;   // Ind: indeterminate number
  int exp = 0;           // Ind: non-zero exponent in normal form

  static Syllable group(std::size_t elem) { return {Kind::Group, elem, 0, 0}; }
  static Syllable x(std::size_t ind, int exp) { return {Kind::Ind, 0, ind, exp}; }
  bool operator==(const Syllable&) const = default;
  auto operator<=>(const Syllable&) const = default;
};

struct Word {
  std::vector<Syllable> syl;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
  bool empty() const { return syl.empty(); }
  std::size_t length() const { return syl.size(); }
};

// Canonical normal form: merges adjacent group elements (dropping units) and
// adjacent powers of the same indeterminate (dropping zero exponents),
// cascading until stable.  Idempotent.
Word normalize(const grp::FinGroup& g, const Word& raw);

Word concat(const grp::FinGroup& g, const Word& a, const Word& b);
Word word_inverse(const grp::FinGroup& g, const Word& a);
Word word_power(const grp::FinGroup& g, const Word& a, int n);

// Replaces every power x_ind^n in s by v^n, then normalizes.
Word substitute(const grp::FinGroup& g, const Word& s, std::size_t ind,
                const Word& v);

// Generic commutation with the group operations, tested through free
// extensions: multiplication uses two fresh indeterminates.
bool commutes_mul(const grp::FinGroup& g, const Word& s);
bool commutes_unit(const grp::FinGroup& g, const Word& s);
bool commutes_inv(const grp::FinGroup& g, const Word& s);

// Searches for t with s[t/x] = x = t[s/x] among candidate words of at most
// length(s) + 2 syllables (exponents in {-2,-1,1,2}).
std::optional<Word> invert_word(const grp::FinGroup& g, const Word& s);

struct IsotropyElement {
  Word word;
  Word inverse;
  bool invertible = false;
  bool commutes_mul = false;
  bool commutes_unit = false;
  bool commutes_inv = false;
};

struct IsotropySearchResult {
  std::size_t max_len = 0;  // the search bound that produced this result
  std::vector<IsotropyElement> elements;
};

// All invertible, generically commuting words of at most max_len syllables
// over one indeterminate.  Search space: normal-form words with exponents in
// {-2,-1,1,2}.  jobs > 1 partitions the candidate space by first syllable.
IsotropySearchResult isotropy_search(const grp::FinGroup& g,
                                     std::size_t max_len = 3,
                                     unsigned jobs = 1);

// Conjugation word g·x·g⁻¹ (in normal form).
Word conjugation_word(const grp::FinGroup& g, std::size_t elem);

std::string show(const grp::FinGroup& g, const Word& w);

}  // namespace isokit::fp
