// Writes the checked-in workspace corpus: categories, groups, presheaves,
// theories, structures, transformations and term files used by the test
// suites and the CLI examples.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "isokit/catalog.hpp"
#include "isokit/fingroup.hpp"
#include "isokit/json_io.hpp"
#include "isokit/tj.hpp"

namespace fs = std::filesystem;
using isokit::io::json;
using isokit::grp::ElemMap;
using isokit::grp::FinGroup;

namespace {

void write(const fs::path& dir, const std::string& name, const json& j) {
  std::ofstream out(dir / name);
  out << j.dump(2) << "\n";
}

json map_json(const FinGroup& from, const FinGroup& to, const ElemMap& m) {
  json j;
  for (std::size_t i = 0; i < from.order(); ++i)
    j[from.elements[i]] = to.elements[m[i]];
  return j;
}

json presheaf_json(const std::string& cat_ref, json on_objects,
                   json on_morphisms) {
  return json{{"category", cat_ref},
              {"on_objects", std::move(on_objects)},
              {"on_morphisms", std::move(on_morphisms)}};
}

json structure_json(const FinGroup& g, const std::string& theory_ref) {
  json j;
  j["theory"] = theory_ref;
  j["carriers"] = json{{"G", g.elements}};
  json m = json::array();
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      m.push_back(json::array(
          {json::array({g.elements[a], g.elements[b]}),
           g.elements[g.op(a, b)]}));
  json e = json::array();
  e.push_back(json::array({json::array(), g.elements[g.unit]}));
  json inv = json::array();
  for (std::size_t a = 0; a < g.order(); ++a)
    inv.push_back(
        json::array({json::array({g.elements[a]}), g.elements[g.inv[a]]}));
  j["ops"] = json{{"m", m}, {"e", e}, {"inv", inv}};
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path dir = argc > 1 ? argv[1] : "data";
  fs::create_directories(dir);
  namespace cata = isokit::catalog;
  namespace io = isokit::io;
  namespace grp = isokit::grp;
  namespace tj = isokit::tj;

  // Groups.
  FinGroup z2 = cata::cyclic(2), z3 = cata::cyclic(3), z4 = cata::cyclic(4);
  FinGroup z6 = cata::cyclic(6), s3 = cata::sym3(), d4 = cata::dihedral(4);
  FinGroup v4 = cata::klein4();
  write(dir, "z2.json", io::group_to_json(z2));
  write(dir, "z3.json", io::group_to_json(z3));
  write(dir, "z4.json", io::group_to_json(z4));
  write(dir, "z6.json", io::group_to_json(z6));
  write(dir, "s3.json", io::group_to_json(s3));
  write(dir, "d4.json", io::group_to_json(d4));
  write(dir, "klein4.json", io::group_to_json(v4));
  {
    // z3 with one bad cell: 1·2 = 1 instead of 0.
    json broken = io::group_to_json(z3);
    broken["mul"][1][2] = "1";
    write(dir, "broken_group.json", broken);
  }

  // Categories.
  write(dir, "terminal.json", io::category_to_json(cata::terminal_category()));
  write(dir, "discrete2.json", io::category_to_json(cata::discrete(2)));
  write(dir, "discrete3.json", io::category_to_json(cata::discrete(3)));
  write(dir, "arrow.json", io::category_to_json(cata::arrow_category()));
  write(dir, "parallel_pair.json", io::category_to_json(cata::parallel_pair()));
  write(dir, "cospan.json", io::category_to_json(cata::cospan()));
  write(dir, "square.json", io::category_to_json(cata::square_poset()));
  write(dir, "bz2.json", io::category_to_json(cata::bz(2)));
  write(dir, "bz3.json", io::category_to_json(cata::bz(3)));
  write(dir, "bs3.json", io::category_to_json(cata::delooping(s3)));
  {
    // bz3 with t2∘t2 redirected from t to t2: associativity fails.
    json broken = io::category_to_json(cata::bz(3));
    for (auto& triple : broken["composition"])
      if (triple[0] == "t2" && triple[1] == "t2") triple[2] = "t2";
    write(dir, "broken_cat.json", broken);
  }

  // Presheaves.  Identity morphisms are omitted from on_morphisms.
  ElemMap z3_inv = z3.inv, z4_inv = z4.inv;
  ElemMap s3_inn_s = grp::inn(s3, *s3.element("s"));
  write(dir, "terminal_z3.json",
        presheaf_json("terminal.json", {{"*", "z3.json"}}, json::object()));
  write(dir, "terminal_s3.json",
        presheaf_json("terminal.json", {{"*", "s3.json"}}, json::object()));
  write(dir, "bz2_z3_inv.json",
        presheaf_json("bz2.json", {{"*", "z3.json"}},
                      {{"t", map_json(z3, z3, z3_inv)}}));
  write(dir, "bz2_z4_inv.json",
        presheaf_json("bz2.json", {{"*", "z4.json"}},
                      {{"t", map_json(z4, z4, z4_inv)}}));
  write(dir, "bz2_s3_conj.json",
        presheaf_json("bz2.json", {{"*", "s3.json"}},
                      {{"t", map_json(s3, s3, s3_inn_s)}}));
  {
    ElemMap rot{*z3.element("0"), *s3.element("r"), *s3.element("r2")};
    write(dir, "arrow_z3_s3.json",
          presheaf_json("arrow.json",
                        {{"0", "z3.json"}, {"1", "s3.json"}},
                        {{"a", map_json(z3, s3, rot)}}));
  }
  {
    ElemMap sign(s3.order(), 0);
    for (std::size_t i = 0; i < s3.order(); ++i)
      sign[i] = s3.elements[i].back() == 's' ? 1 : 0;
    write(dir, "arrow_s3_z2.json",
          presheaf_json("arrow.json",
                        {{"0", "s3.json"}, {"1", "z2.json"}},
                        {{"a", map_json(s3, z2, sign)}}));
  }
  write(dir, "parpair_z4.json",
        presheaf_json("parallel_pair.json",
                      {{"0", "z4.json"}, {"1", "z4.json"}},
                      {{"f", map_json(z4, z4, grp::identity_map(4))},
                       {"g", map_json(z4, z4, z4_inv)}}));
  write(dir, "parpair_s3.json",
        presheaf_json("parallel_pair.json",
                      {{"0", "s3.json"}, {"1", "s3.json"}},
                      {{"f", map_json(s3, s3, grp::identity_map(6))},
                       {"g", map_json(s3, s3,
                                      grp::inn(s3, *s3.element("r")))}}));
  {
    ElemMap hit_s{*s3.element("e"), *s3.element("s")};
    ElemMap hit_rs{*s3.element("e"), *s3.element("rs")};
    write(dir, "cospan_z2_s3.json",
          presheaf_json("cospan.json",
                        {{"0", "z2.json"}, {"1", "z2.json"},
                         {"2", "s3.json"}},
                        {{"f", map_json(z2, s3, hit_s)},
                         {"g", map_json(z2, s3, hit_rs)}}));
  }
  write(dir, "discrete2_s3_s3.json",
        presheaf_json("discrete2.json",
                      {{"o0", "s3.json"}, {"o1", "s3.json"}},
                      json::object()));

  // Theory and structures.
  write(dir, "group_theory.json", io::theory_to_json(tj::group_theory()));
  write(dir, "z2_struct.json", structure_json(z2, "group_theory.json"));
  write(dir, "z3_struct.json", structure_json(z3, "group_theory.json"));
  write(dir, "s3_struct.json", structure_json(s3, "group_theory.json"));

  // Transformations.
  write(dir, "terminal_z3_inv.json",
        json{{"presheaf", "terminal_z3.json"},
             {"components", {{"*", map_json(z3, z3, z3_inv)}}}});
  write(dir, "terminal_s3_inn_r.json",
        json{{"presheaf", "terminal_s3.json"},
             {"components",
              {{"*", map_json(s3, s3, grp::inn(s3, *s3.element("r")))}}}});
  write(dir, "bz2_z3_inv_pi.json",
        json{{"presheaf", "bz2_z3_inv.json"},
             {"components", {{"*", map_json(z3, z3, z3_inv)}}}});

  // Terms.
  write(dir, "term_bz2.json",
        json{{"term", "(alpha t (m@* x (inv@* c:1)))"},
             {"at", "*"},
             {"presheaf", "bz2_z3_inv.json"}});
  write(dir, "term_terminal.json",
        json{{"term", "(m@* x (inv@* x))"},
             {"at", "*"},
             {"presheaf", "terminal_s3.json"}});

  std::cout << "wrote workspace to " << dir.string() << "\n";
  return 0;
}
