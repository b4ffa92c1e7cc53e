#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "isokit/catalog.hpp"
#include "isokit/cli.hpp"
#include "isokit/json_io.hpp"
#include "isokit/phl.hpp"
#include "isokit/tj.hpp"

using namespace isokit;
using io::json;

namespace {

std::string data(const std::string& name) {
  return std::string(ISOKIT_DATA_DIR) + "/" + name;
}

struct RunResult {
  int code = 0;
  std::string out, err;
  json out_json() const { return json::parse(out); }
  json err_json() const { return json::parse(err); }
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Writes content to a fresh file under the system temp directory.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& content, const char* tag) {
    path = std::filesystem::temp_directory_path() /
           (std::string("isokit_test_") + tag + ".json");
    std::ofstream(path) << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("group and category json roundtrips are stable") {
  for (const auto& g : {catalog::sym3(), catalog::dihedral(4),
                        catalog::klein4(), catalog::cyclic(6)}) {
    json j = io::group_to_json(g);
    grp::FinGroup back = io::group_from_json(j);
    CHECK(grp::check_group(back).ok());
    CHECK(io::group_to_json(back) == j);
  }
  CHECK(io::load_json_file(data("s3.json")) ==
        io::group_to_json(catalog::sym3()));

  for (const auto& c : {catalog::square_poset(), catalog::bz(3),
                        catalog::cospan()}) {
    json j = io::category_to_json(c);
    cat::FinCategory back = io::category_from_json(j);
    CHECK(cat::check_category(back).ok());
    CHECK(io::category_to_json(back) == j);
  }
  CHECK(io::load_json_file(data("square.json")) ==
        io::category_to_json(catalog::square_poset()));
}

TEST_CASE("theory json roundtrips through parsing and printing") {
  phl::Theory t = tj::group_theory();
  json j = io::theory_to_json(t);
  phl::Theory back = io::theory_from_json(j);
  CHECK(phl::check_theory_wf(back).ok());
  CHECK(io::theory_to_json(back) == j);
  CHECK(io::load_json_file(data("group_theory.json")) == j);

  // a translated theory survives the same trip
  json big = io::theory_to_json(tj::build_tj(t, catalog::bz(2)).theory);
  CHECK(io::theory_to_json(io::theory_from_json(big)) == big);
}

TEST_CASE("words serialize in normal form") {
  grp::FinGroup s3 = catalog::sym3();
  json alternating = json::array(
      {json{{"g", "r"}}, json{{"x", -2}}, json{{"g", "s"}}});
  fp::Word w = io::word_from_json(s3, alternating);
  CHECK(io::word_to_json(s3, w) == alternating);

  // adjacent group syllables merge on the way in
  json mergeable = json::array({json{{"g", "r"}}, json{{"g", "r2"}}});
  CHECK(io::word_to_json(s3, io::word_from_json(s3, mergeable)) ==
        json::array());
  json cancel = json::array({json{{"x", 1}}, json{{"x", -1}}});
  CHECK(io::word_from_json(s3, cancel).empty());

  CHECK_THROWS_AS(io::word_from_json(s3, json::array({json{{"g", "q"}}})),
                  io::SchemaError);
  CHECK_THROWS_AS(io::word_from_json(s3, json::array({json{{"y", 1}}})),
                  io::SchemaError);
}

TEST_CASE("file kinds are detected from shape") {
  auto kind_of = [&](const std::string& name) {
    return io::kind_name(io::detect_kind(io::load_json_file(data(name))));
  };
  CHECK(kind_of("s3.json") == "group");
  CHECK(kind_of("terminal.json") == "category");
  CHECK(kind_of("bz2_z3_inv.json") == "presheaf");
  CHECK(kind_of("group_theory.json") == "theory");
  CHECK(kind_of("z3_struct.json") == "structure");
  CHECK(kind_of("bz2_z3_inv_pi.json") == "nat-trans");
  CHECK(kind_of("term_bz2.json") == "term");
  CHECK(io::detect_kind(json::object()) == io::FileKind::Unknown);

  CHECK_THROWS_AS(io::load_json_file(data("no_such_file.json")),
                  io::SchemaError);
  TempFile garbage("{not json", "garbage");
  CHECK_THROWS_AS(io::load_json_file(garbage.str()), io::SchemaError);
}

TEST_CASE("presheaf files resolve references relative to themselves") {
  psh::GroupPresheaf f = io::presheaf_from_file(data("bz2_z3_inv.json"));
  CHECK(psh::check_presheaf(f).ok());
  CHECK(f.base.objects == std::vector<std::string>{"*"});
  CHECK(f.groups[0].order() == 3);
  CHECK(f.action[*f.base.morphism_index("t")] == catalog::cyclic(3).inv);

  psh::GroupPresheaf c = io::presheaf_from_file(data("cospan_z2_s3.json"));
  CHECK(psh::check_presheaf(c).ok());
  grp::FinGroup s3 = catalog::sym3();
  CHECK(c.groups[2].order() == 6);
  CHECK(c.action[*c.base.morphism_index("f")][1] == *s3.element("s"));
  CHECK(c.action[*c.base.morphism_index("g")][1] == *s3.element("rs"));
}

TEST_CASE("structure files build checkable models") {
  phl::Theory t =
      io::theory_from_json(io::load_json_file(data("group_theory.json")));
  phl::PartialStructure m = io::structure_from_json(
      io::load_json_file(data("z3_struct.json")), t.signature);
  CHECK(phl::check_structure(m).ok());
  phl::ModelReport rep = phl::check_model(m, t);
  CHECK(rep.ok);
  CHECK(rep.axioms_checked == 8);
}

TEST_CASE("transformation files carry per-object tables") {
  psh::GroupPresheaf f = io::presheaf_from_file(data("terminal_s3.json"));
  json nj = io::load_json_file(data("terminal_s3_inn_r.json"));
  std::vector<grp::ElemMap> comps = io::components_from_json(nj, f);
  REQUIRE(comps.size() == 1);
  grp::FinGroup s3 = catalog::sym3();
  CHECK(comps[0] == grp::inn(s3, *s3.element("r")));
}

TEST_CASE("validate detects kinds and splits exit codes") {
  RunResult ok = run_cli({"validate", data("s3.json")});
  CHECK(ok.code == 0);
  CHECK(ok.err.empty());
  CHECK(ok.out_json()["kind"] == "group");
  CHECK(ok.out_json()["ok"] == true);

  CHECK(run_cli({"validate", data("terminal.json")}).out_json()["kind"] ==
        "category");
  CHECK(run_cli({"validate", data("bz2_z3_inv.json")}).out_json()["kind"] ==
        "presheaf");
  CHECK(run_cli({"validate", data("group_theory.json")}).out_json()["kind"] ==
        "theory");
  CHECK(run_cli({"validate", data("z3_struct.json")}).out_json()["kind"] ==
        "structure");
  CHECK(run_cli({"validate", data("bz2_z3_inv_pi.json")}).out_json()["kind"] ==
        "nat-trans");
  CHECK(run_cli({"validate", data("term_bz2.json")}).out_json()["kind"] ==
        "term");

  RunResult bad_group = run_cli({"validate", data("broken_group.json")});
  CHECK(bad_group.code == 1);
  CHECK(bad_group.out.empty());
  CHECK(bad_group.err_json()["ok"] == false);
  CHECK(!bad_group.err_json()["issues"].empty());

  RunResult bad_cat = run_cli({"validate", data("broken_cat.json")});
  CHECK(bad_cat.code == 1);
  CHECK(bad_cat.err_json()["kind"] == "category");

  RunResult missing = run_cli({"validate", data("no_such_file.json")});
  CHECK(missing.code == 2);
  CHECK(missing.err_json().contains("error"));
}

TEST_CASE("analysis subcommands report the frozen orders") {
  CHECK(run_cli({"aut-id", data("bz3.json")}).out_json()["order"] == 3);
  CHECK(run_cli({"aut-id", data("bs3.json")}).out_json()["order"] == 1);

  RunResult lim = run_cli({"limit", data("bz2_z3_inv.json")});
  CHECK(lim.code == 0);
  CHECK(lim.out_json()["order"] == 1);
  CHECK(lim.out_json()["elements"][0] == json{{"*", "0"}});

  CHECK(run_cli({"nat-auts", data("discrete2_s3_s3.json")})
            .out_json()["order"] == 36);

  RunResult big = run_cli({"isotropy", data("discrete2_s3_s3.json")});
  CHECK(big.out_json()["order"] == 36);
  CHECK(big.out_json()["limit_order"] == 36);
  CHECK(big.out_json()["aut_id_order"] == 1);

  CHECK(run_cli({"isotropy", data("parpair_z4.json")}).out_json()["order"] ==
        2);

  RunResult one = run_cli({"isotropy", data("cospan_z2_s3.json")});
  CHECK(one.out_json()["order"] == 1);
  CHECK(one.out_json()["generators"].empty());

  RunResult tw = run_cli({"isotropy", data("bz2_z3_inv.json")});
  CHECK(tw.out_json()["order"] == 2);
  CHECK(tw.out_json()["aut_id_order"] == 2);
  CHECK(tw.out_json()["elements"][1]["psi"] == json{{"*", "t"}});
}

TEST_CASE("is-inner reproduces the witness oracles") {
  RunResult in = run_cli(
      {"is-inner", data("bz2_z3_inv.json"), data("bz2_z3_inv_pi.json")});
  CHECK(in.code == 0);
  json j = in.out_json();
  CHECK(j["inner"] == true);
  CHECK(j["count"] == 1);
  CHECK(j["witnesses"][0]["g"] == json{{"*", "0"}});
  CHECK(j["witnesses"][0]["psi"] == json{{"*", "t"}});

  RunResult out = run_cli(
      {"is-inner", data("terminal_z3.json"), data("terminal_z3_inv.json")});
  CHECK(out.code == 0);
  CHECK(out.out_json()["inner"] == false);
  CHECK(out.out_json()["count"] == 0);

  RunResult conj = run_cli(
      {"is-inner", data("terminal_s3.json"), data("terminal_s3_inn_r.json")});
  CHECK(conj.out_json()["count"] == 1);
  CHECK(conj.out_json()["witnesses"][0]["g"] == json{{"*", "r"}});
}

TEST_CASE("isotropy-search output is frozen and job-count independent") {
  RunResult s3 = run_cli({"isotropy-search", data("s3.json")});
  CHECK(s3.code == 0);
  json j = s3.out_json();
  CHECK(j["group_order"] == 6);
  CHECK(j["max_len"] == 3);
  CHECK(j["count"] == 6);

  RunResult parallel =
      run_cli({"isotropy-search", data("s3.json"), "--jobs", "4"});
  CHECK(parallel.out == s3.out);

  CHECK(run_cli({"isotropy-search", data("z4.json")}).out_json()["count"] ==
        4);
  // repeated runs are byte-identical
  CHECK(run_cli({"isotropy-search", data("s3.json")}).out == s3.out);
}

TEST_CASE("build-tj exposes the translated theory with its counts") {
  RunResult bz2 =
      run_cli({"build-tj", data("group_theory.json"), data("bz2.json")});
  CHECK(bz2.code == 0);
  json j = bz2.out_json();
  CHECK(j["meta"]["sorts"] == 1);
  CHECK(j["meta"]["funs"] == 5);
  CHECK(j["meta"]["axioms"]["totality"] == 2);
  CHECK(j["meta"]["axioms"]["identity"] == 1);
  CHECK(j["meta"]["axioms"]["composition"] == 4);
  CHECK(j["meta"]["axioms"]["hom"] == 6);
  CHECK(j["meta"]["axioms"]["translated"] == 8);
  CHECK(j["meta"]["axioms"]["total"] == 21);
  phl::Theory back = io::theory_from_json(j);
  CHECK(phl::check_theory_wf(back).ok());
  CHECK(back.axioms.size() == 21);

  RunResult arrow =
      run_cli({"build-tj", data("group_theory.json"), data("arrow.json")});
  CHECK(arrow.out_json()["meta"]["sorts"] == 2);
  CHECK(arrow.out_json()["meta"]["funs"] == 9);
  CHECK(arrow.out_json()["meta"]["axioms"]["total"] == 34);
}

TEST_CASE("check-model passes sound structures and rejects mutants") {
  RunResult ok = run_cli(
      {"check-model", data("z3_struct.json"), data("group_theory.json")});
  CHECK(ok.code == 0);
  CHECK(ok.out_json()["ok"] == true);
  CHECK(ok.out_json()["axioms_checked"] == 8);

  CHECK(run_cli({"check-model", data("s3_struct.json"),
                 data("group_theory.json")})
            .code == 0);

  // corrupt one multiplication entry and watch an axiom fail
  json sj = io::load_json_file(data("z3_struct.json"));
  for (auto& entry : sj["ops"]["m"])
    if (entry[0] == json::array({"0", "0"})) entry[1] = "1";
  TempFile mutant(sj.dump(2), "mutant_struct");
  RunResult bad = run_cli(
      {"check-model", mutant.str(), data("group_theory.json")});
  CHECK(bad.code == 1);
  CHECK(bad.err_json()["ok"] == false);
  CHECK(bad.err_json()["axioms_checked"] == 8);
  CHECK(!bad.err_json()["failures"].empty());
}

TEST_CASE("term subcommands normalize and translate") {
  RunResult nf = run_cli({"normalize", data("term_bz2.json")});
  CHECK(nf.code == 0);
  json j = nf.out_json();
  CHECK(j["object"] == "*");
  CHECK(j["input"] == "(alpha t (m@* x (inv@* c:1)))");
  CHECK(j["normal_form"] == "(m@* (alpha t x) (inv@* c:2))");
  CHECK(j["alpha_restricted"] == true);
  CHECK(j["size"] == 5);

  CHECK(run_cli({"normalize", "(alpha t c:1)", "--presheaf",
                 data("bz2_z3_inv.json")})
            .out_json()["normal_form"] == "c:2");
  CHECK(run_cli({"normalize", "x", "--presheaf", data("terminal_z3.json"),
                 "--at", "*"})
            .out_json()["normal_form"] == "x");

  // theta requires alpha-restrictedness unless asked to normalize first
  RunResult raw = run_cli({"theta", data("term_bz2.json")});
  CHECK(raw.code == 1);
  CHECK(raw.err_json().contains("error"));
  CHECK(raw.err_json()["term"] == "(alpha t (m@* x (inv@* c:1)))");

  CHECK(run_cli({"theta", data("term_bz2.json"), "--normalize"})
            .out_json()["theta"] == "(m x@t (inv c:2))");
  CHECK(run_cli({"theta-star", data("term_bz2.json"), "--normalize"})
            .out_json()["theta_star"] == "(m x (inv c:2))");

  CHECK(run_cli({"theta", data("term_terminal.json")}).out_json()["theta"] ==
        "(m x@id (inv x@id))");
  CHECK(run_cli({"theta-star", data("term_terminal.json")})
            .out_json()["theta_star"] == "(m x (inv x))");

  // explicit options override the refs carried by the file
  RunResult moved = run_cli({"theta", data("term_terminal.json"),
                             "--presheaf", data("terminal_s3.json")});
  CHECK(moved.code == 0);
  CHECK(moved.out_json()["theta"] == "(m x@id (inv x@id))");

  CHECK(run_cli({"normalize", "(m@* x", "--presheaf",
                 data("bz2_z3_inv.json")})
            .code == 2);
  CHECK(run_cli({"normalize", "x"}).code == 2);
  CHECK(run_cli({"normalize", "x", "--presheaf", data("terminal_z3.json"),
                 "--at", "oops"})
            .code == 2);
}

TEST_CASE("argument errors exit 2 and help exits 0") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  RunResult noargs = run_cli({"validate"});
  CHECK(noargs.code == 2);
  CHECK(noargs.err_json().contains("error"));

  RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("isokit") != std::string::npos);
  CHECK(help.err.empty());

  // repeated runs of the same query are byte-identical
  CHECK(run_cli({"isotropy", data("discrete2_s3_s3.json")}).out ==
        run_cli({"isotropy", data("discrete2_s3_s3.json")}).out);
}
