#include "isokit/freeword.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace isokit::fp {

namespace {

void push_syllable(const grp::FinGroup& g, std::vector<Syllable>& stack,
                   Syllable s) {
  if (s.kind == Syllable::Kind::Group && s.elem == g.unit) return;
  if (s.kind == Syllable::Kind::Ind && s.exp == 0) return;
  if (!stack.empty()) {
    Syllable& top = stack.back();
    if (top.kind == Syllable::Kind::Group && s.kind == Syllable::Kind::Group) {
      std::size_t prod = g.op(top.elem, s.elem);
      stack.pop_back();
      push_syllable(g, stack, Syllable::group(prod));
      return;
    }
    if (top.kind == Syllable::Kind::Ind && s.kind == Syllable::Kind::Ind &&
        top.ind == s.ind) {
      int exp = top.exp + s.exp;
      std::size_t ind = top.ind;
      stack.pop_back();
      push_syllable(g, stack, Syllable::x(ind, exp));
      return;
    }
  }
  stack.push_back(s);
}

}  // namespace

Word normalize(const grp::FinGroup& g, const Word& raw) {
  Word out;
  for (const Syllable& s : raw.syl) push_syllable(g, out.syl, s);
  return out;
}

Word concat(const grp::FinGroup& g, const Word& a, const Word& b) {
  Word out = a;
  for (const Syllable& s : b.syl) push_syllable(g, out.syl, s);
  return out;
}

Word word_inverse(const grp::FinGroup& g, const Word& a) {
  Word out;
  for (auto it = a.syl.rbegin(); it != a.syl.rend(); ++it) {
    Syllable s = *it;
    if (s.kind == Syllable::Kind::Group)
      s.elem = g.inverse(s.elem);
    else
      s.exp = -s.exp;
    push_syllable(g, out.syl, s);
  }
  return out;
}

Word word_power(const grp::FinGroup& g, const Word& a, int n) {
  Word base = n < 0 ? word_inverse(g, a) : a;
  int reps = n < 0 ? -n : n;
  Word out;
  for (int i = 0; i < reps; ++i) out = concat(g, out, base);
  return out;
}

Word substitute(const grp::FinGroup& g, const Word& s, std::size_t ind,
                const Word& v) {
  Word out;
  for (const Syllable& syl : s.syl) {
    if (syl.kind == Syllable::Kind::Ind && syl.ind == ind) {
      Word rep = word_power(g, v, syl.exp);
      for (const Syllable& t : rep.syl) push_syllable(g, out.syl, t);
    } else {
      push_syllable(g, out.syl, syl);
    }
  }
  return out;
}

bool commutes_mul(const grp::FinGroup& g, const Word& s) {
  // s(x0·x1) = s(x0)·s(x1) inside G * F(x0, x1).
  Word x0x1{{Syllable::x(0, 1), Syllable::x(1, 1)}};
  Word lhs = substitute(g, s, 0, x0x1);
  Word sx1 = substitute(g, s, 0, Word{{Syllable::x(1, 1)}});
  Word rhs = concat(g, s, sx1);
  return lhs == rhs;
}

bool commutes_unit(const grp::FinGroup& g, const Word& s) {
  return substitute(g, s, 0, Word{}).empty();
}

bool commutes_inv(const grp::FinGroup& g, const Word& s) {
  Word xinv{{Syllable::x(0, -1)}};
  return substitute(g, s, 0, xinv) == word_inverse(g, s);
}

namespace {

constexpr int kExponents[] = {-2, -1, 1, 2};

// Enumerates normal-form candidates over one indeterminate: alternating
// non-unit group elements and x-powers with exponents in {-2,-1,1,2}.
template <typename Fn>
void enumerate_words(const grp::FinGroup& g, std::size_t max_len, Fn&& visit) {
  Word w;
  auto rec = [&](auto&& self) -> bool {
    if (!visit(w)) return false;
    if (w.length() == max_len) return true;
    bool last_group =
        !w.syl.empty() && w.syl.back().kind == Syllable::Kind::Group;
    bool last_ind = !w.syl.empty() && w.syl.back().kind == Syllable::Kind::Ind;
    if (!last_group) {
      for (std::size_t e = 0; e < g.order(); ++e) {
        if (e == g.unit) continue;
        w.syl.push_back(Syllable::group(e));
        bool cont = self(self);
        w.syl.pop_back();
        if (!cont) return false;
      }
    }
    if (!last_ind) {
      for (int exp : kExponents) {
        w.syl.push_back(Syllable::x(0, exp));
        bool cont = self(self);
        w.syl.pop_back();
        if (!cont) return false;
      }
    }
    return true;
  };
  rec(rec);
}

bool is_identity_substitution(const grp::FinGroup& g, const Word& s,
                              const Word& t) {
  Word x{{Syllable::x(0, 1)}};
  return substitute(g, s, 0, t) == x && substitute(g, t, 0, s) == x;
}

}  // namespace

std::optional<Word> invert_word(const grp::FinGroup& g, const Word& s) {
  std::optional<Word> found;
  enumerate_words(g, s.length() + 2, [&](const Word& t) {
    if (is_identity_substitution(g, s, t)) {
      found = t;
      return false;
    }
    return true;
  });
  return found;
}

namespace {

std::optional<IsotropyElement> screen_candidate(const grp::FinGroup& g,
                                                const Word& w) {
  IsotropyElement e;
  e.word = w;
  e.commutes_unit = commutes_unit(g, w);
  if (!e.commutes_unit) return std::nullopt;
  e.commutes_mul = commutes_mul(g, w);
  if (!e.commutes_mul) return std::nullopt;
  e.commutes_inv = commutes_inv(g, w);
  if (!e.commutes_inv) return std::nullopt;
  auto inv = invert_word(g, w);
  if (!inv) return std::nullopt;
  e.invertible = true;
  e.inverse = *inv;
  return e;
}

}  // namespace

IsotropySearchResult isotropy_search(const grp::FinGroup& g,
                                     std::size_t max_len, unsigned jobs) {
  IsotropySearchResult out;
  out.max_len = max_len;

  std::vector<Word> candidates;
  enumerate_words(g, max_len, [&](const Word& w) {
    candidates.push_back(w);
    return true;
  });

  std::vector<IsotropyElement> found;
  if (jobs <= 1) {
    for (const Word& w : candidates)
      if (auto e = screen_candidate(g, w)) found.push_back(*e);
  } else {
    // Partition candidates by index; each worker screens its share.
    std::vector<std::future<std::vector<IsotropyElement>>> futures;
    for (unsigned j = 0; j < jobs; ++j)
      futures.push_back(std::async(std::launch::async, [&, j]() {
        std::vector<IsotropyElement> local;
        for (std::size_t i = j; i < candidates.size(); i += jobs)
          if (auto e = screen_candidate(g, candidates[i])) local.push_back(*e);
        return local;
      }));
    for (auto& fu : futures) {
      auto local = fu.get();
      found.insert(found.end(), local.begin(), local.end());
    }
  }
  std::sort(found.begin(), found.end(),
            [](const IsotropyElement& a, const IsotropyElement& b) {
              return a.word < b.word;
            });
  out.elements = std::move(found);
  return out;
}

Word conjugation_word(const grp::FinGroup& g, std::size_t elem) {
  Word w{{Syllable::group(elem), Syllable::x(0, 1),
          Syllable::group(g.inverse(elem))}};
  return normalize(g, w);
}

std::string show(const grp::FinGroup& g, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : w.syl) {
    if (!first) os << '*';
    first = false;
    if (s.kind == Syllable::Kind::Group) {
      os << g.elements[s.elem];
    } else {
      os << 'x';
      if (s.ind != 0) os << s.ind;
      if (s.exp != 1) os << '^' << s.exp;
    }
  }
  return os.str();
}

}  // namespace isokit::fp
