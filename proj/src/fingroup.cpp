#include "isokit/fingroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace isokit::grp {

std::optional<std::size_t> FinGroup::element(const std::string& name) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == name) return i;
  return std::nullopt;
}

std::size_t FinGroup::elem_order(std::size_t a) const {
  std::size_t n = 1, x = a;
  while (x != unit) {
    x = op(x, a);
    ++n;
  }
  return n;
}

FinGroup FinGroup::from_mul_table(std::vector<std::string> elements,
                                  std::size_t unit,
                                  std::vector<std::vector<std::size_t>> mul) {
  FinGroup g;
  g.elements = std::move(elements);
  g.unit = unit;
  g.mul = std::move(mul);
  g.inv.assign(g.elements.size(), 0);
  for (std::size_t a = 0; a < g.elements.size(); ++a) {
    bool found = false;
    for (std::size_t b = 0; b < g.elements.size(); ++b)
      if (g.mul[a][b] == unit && g.mul[b][a] == unit) {
        g.inv[a] = b;
        found = true;
        break;
      }
    if (!found)
      throw std::invalid_argument("element " + g.elements[a] +
                                  " has no two-sided inverse");
  }
  return g;
}

ValidationReport check_group(const FinGroup& g) {
  ValidationReport r;
  std::size_t n = g.order();
  std::set<std::string> names(g.elements.begin(), g.elements.end());
  if (names.size() != n) r.add("group", "duplicate element name");
  if (g.unit >= n) {
    r.add("group", "unit index out of range");
    return r;
  }
  if (g.mul.size() != n || g.inv.size() != n) {
    r.add("group", "table dimensions do not match element count");
    return r;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mul[a].size() != n) {
      r.add("group", "row " + g.elements[a] + " has wrong length");
      return r;
    }
    for (std::size_t b = 0; b < n; ++b)
      if (g.mul[a][b] >= n) {
        r.add("group", "product out of range at (" + g.elements[a] + ", " +
                           g.elements[b] + ")");
        return r;
      }
    if (g.inv[a] >= n) {
      r.add("group", "inverse of " + g.elements[a] + " out of range");
      return r;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.op(g.unit, a) != a)
      r.add("unit", "e·" + g.elements[a] + " ≠ " + g.elements[a]);
    if (g.op(a, g.unit) != a)
      r.add("unit", g.elements[a] + "·e ≠ " + g.elements[a]);
    if (g.op(g.inv[a], a) != g.unit)
      r.add("inverse", g.elements[g.inv[a]] + "·" + g.elements[a] + " ≠ e");
    if (g.op(a, g.inv[a]) != g.unit)
      r.add("inverse", g.elements[a] + "·" + g.elements[g.inv[a]] + " ≠ e");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          r.add("associativity", "(" + g.elements[a] + "·" + g.elements[b] +
                                     ")·" + g.elements[c] + " ≠ " +
                                     g.elements[a] + "·(" + g.elements[b] +
                                     "·" + g.elements[c] + ")");
  return r;
}

ValidationReport check_hom(const FinGroup& src, const FinGroup& tgt,
                           const ElemMap& h) {
  ValidationReport r;
  if (h.size() != src.order()) {
    r.add("hom", "map size does not match source order");
    return r;
  }
  for (std::size_t a = 0; a < h.size(); ++a)
    if (h[a] >= tgt.order()) {
      r.add("hom", "image of " + src.elements[a] + " out of range");
      return r;
    }
  for (std::size_t a = 0; a < src.order(); ++a)
    for (std::size_t b = 0; b < src.order(); ++b)
      if (h[src.op(a, b)] != tgt.op(h[a], h[b]))
        r.add("hom", "h(" + src.elements[a] + "·" + src.elements[b] +
                         ") ≠ h(" + src.elements[a] + ")·h(" +
                         src.elements[b] + ")");
  return r;
}

bool is_bijective(const ElemMap& h) {
  std::vector<bool> hit(h.size(), false);
  for (std::size_t v : h) {
    if (v >= h.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

ElemMap compose_maps(const ElemMap& g, const ElemMap& f) {
  ElemMap out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

ElemMap identity_map(std::size_t n) {
  ElemMap out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

ElemMap invert_map(const ElemMap& h) {
  ElemMap out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[h[i]] = i;
  return out;
}

ElemMap inn(const FinGroup& g, std::size_t s) {
  ElemMap out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    out[x] = g.op(g.op(s, x), g.inverse(s));
  return out;
}

std::vector<std::size_t> generating_set(const FinGroup& g) {
  std::vector<std::size_t> gens;
  std::vector<bool> reached(g.order(), false);
  reached[g.unit] = true;
  std::size_t count = 1;
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t a = 0; a < g.order(); ++a) {
        if (!reached[a]) continue;
        for (std::size_t b = 0; b < g.order(); ++b) {
          if (!reached[b]) continue;
          std::size_t ab = g.op(a, b);
          if (!reached[ab]) {
            reached[ab] = true;
            ++count;
            grew = true;
          }
        }
      }
    }
  };
  while (count < g.order()) {
    std::size_t next = 0;
    while (reached[next]) ++next;
    gens.push_back(next);
    reached[next] = true;
    ++count;
    close();
  }
  return gens;
}

namespace {

// Expresses every element as a word in the generators: word[x] is a sequence
// of generator positions whose product (left to right) is x.
std::vector<std::vector<std::size_t>> generator_words(
    const FinGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<std::vector<std::size_t>> word(g.order());
  std::vector<bool> known(g.order(), false);
  known[g.unit] = true;
  std::vector<std::size_t> frontier{g.unit};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t x : frontier)
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        std::size_t y = g.op(x, gens[gi]);
        if (known[y]) continue;
        known[y] = true;
        word[y] = word[x];
        word[y].push_back(gi);
        next.push_back(y);
      }
    frontier = std::move(next);
  }
  return word;
}

}  // namespace

std::vector<ElemMap> automorphism_group(const FinGroup& g) {
  std::vector<std::size_t> gens = generating_set(g);
  if (gens.empty()) return {identity_map(g.order())};
  std::vector<std::vector<std::size_t>> word = generator_words(g, gens);

  // Candidate images must preserve element order.
  std::vector<std::vector<std::size_t>> images(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::size_t ord = g.elem_order(gens[gi]);
    for (std::size_t x = 0; x < g.order(); ++x)
      if (g.elem_order(x) == ord) images[gi].push_back(x);
  }

  std::vector<ElemMap> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    ElemMap h(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::size_t v = g.unit;
      for (std::size_t gi : word[x]) v = g.op(v, images[gi][pick[gi]]);
      h[x] = v;
    }
    if (is_bijective(h) && check_hom(g, g, h).ok()) out.push_back(h);
    std::size_t i = gens.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++pick[i] < images[i].size()) {
        done = false;
        break;
      }
      pick[i] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> center(const FinGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b)
      central = g.op(a, b) == g.op(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

}  // namespace isokit::grp
