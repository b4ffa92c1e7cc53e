#include "isokit/cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isokit/alpha.hpp"
#include "isokit/fincat.hpp"
#include "isokit/fingroup.hpp"
#include "isokit/freeword.hpp"
#include "isokit/isotropy.hpp"
#include "isokit/json_io.hpp"
#include "isokit/phl.hpp"
#include "isokit/presheaf.hpp"
#include "isokit/sexpr.hpp"
#include "isokit/tj.hpp"

namespace isokit::cli {

namespace {

using io::json;

// Carries an exit-1 validation failure up to the dispatcher.
struct Failure {
  json detail;
};

void require_valid(const ValidationReport& r, const std::string& what) {
  if (r.ok()) return;
  throw Failure{json{{"file", what}, {"issues", io::report_to_json(r)}}};
}

std::string jstr(const json& j, const char* what) {
  if (!j.is_string())
    throw io::SchemaError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

// Refs inside a file resolve relative to that file's directory.
std::string resolve(const std::string& base_file, const std::string& ref) {
  return (std::filesystem::path(base_file).parent_path() / ref).string();
}

grp::FinGroup load_group(const std::string& path) {
  grp::FinGroup g = io::group_from_json(io::load_json_file(path));
  require_valid(grp::check_group(g), path);
  return g;
}

cat::FinCategory load_category(const std::string& path) {
  cat::FinCategory c = io::category_from_json(io::load_json_file(path));
  require_valid(cat::check_category(c), path);
  return c;
}

psh::GroupPresheaf load_presheaf(const std::string& path) {
  psh::GroupPresheaf f = io::presheaf_from_file(path);
  require_valid(psh::check_presheaf(f), path);
  return f;
}

phl::Theory load_theory(const std::string& path) {
  phl::Theory t = io::theory_from_json(io::load_json_file(path));
  require_valid(phl::check_theory_wf(t), path);
  return t;
}

json tuple_json(const psh::GroupPresheaf& f,
                const std::vector<std::size_t>& t) {
  json j;
  for (std::size_t o = 0; o < f.base.objects.size(); ++o)
    j[f.base.objects[o]] = f.groups[o].elements[t[o]];
  return j;
}

json psi_json(const cat::FinCategory& c, const cat::IdNatAut& a) {
  json j;
  for (std::size_t o = 0; o < c.objects.size(); ++o)
    j[c.objects[o]] = c.morphisms[a.component[o]].name;
  return j;
}

json components_json(const psh::GroupPresheaf& f,
                     const std::vector<grp::ElemMap>& comps) {
  json j;
  for (std::size_t o = 0; o < f.base.objects.size(); ++o) {
    const grp::FinGroup& g = f.groups[o];
    json table;
    for (std::size_t a = 0; a < g.order(); ++a)
      table[g.elements[a]] = g.elements[comps[o][a]];
    j[f.base.objects[o]] = std::move(table);
  }
  return j;
}

json element_json(const iso::ExtendedInnerAut& e) {
  return json{{"g", tuple_json(*e.F, e.g)},
              {"psi", psi_json(e.F->base, e.psi)}};
}

// The isotropy group as a plain multiplication table, for generator search.
grp::FinGroup materialize(const iso::IsotropyGroup& z) {
  grp::FinGroup g;
  for (std::size_t i = 0; i < z.order(); ++i)
    g.elements.push_back("z" + std::to_string(i));
  g.unit = z.index_of(z.identity());
  g.mul.assign(z.order(), std::vector<std::size_t>(z.order(), 0));
  g.inv.assign(z.order(), 0);
  for (std::size_t i = 0; i < z.order(); ++i) {
    for (std::size_t k = 0; k < z.order(); ++k)
      g.mul[i][k] = z.index_of(z.mul(z.elements[i], z.elements[k]));
    g.inv[i] = z.index_of(z.inverse(z.elements[i]));
  }
  return g;
}

// ---- term plumbing ------------------------------------------------------

struct TermRequest {
  std::string source;                 // s-expression text
  std::string presheaf_path;          // resolved
  std::optional<std::string> at_name; // object hint
};

// The positional argument is either a path to a term file or the
// s-expression itself; CLI options fill in or override file fields.
TermRequest term_request(const std::string& arg,
                         const std::string& presheaf_opt,
                         const std::string& at_opt) {
  TermRequest r;
  if (std::filesystem::exists(arg)) {
    json j = io::load_json_file(arg);
    if (j.is_string()) {
      r.source = j.get<std::string>();
    } else if (j.is_object() && j.contains("term")) {
      r.source = jstr(j.at("term"), "term");
      if (j.contains("presheaf"))
        r.presheaf_path = resolve(arg, jstr(j.at("presheaf"), "presheaf ref"));
      if (j.contains("at")) r.at_name = jstr(j.at("at"), "at");
    } else {
      throw io::SchemaError(arg +
                            ": term files hold a string or {\"term\": ...}");
    }
  } else {
    r.source = arg;
  }
  if (!presheaf_opt.empty()) r.presheaf_path = presheaf_opt;
  if (!at_opt.empty()) r.at_name = at_opt;
  if (r.presheaf_path.empty())
    throw io::SchemaError(
        "no presheaf given: pass --presheaf or use a term file with a "
        "presheaf ref");
  return r;
}

struct TermSetup {
  psh::GroupPresheaf f;
  alpha::AlphaEngine eng;
  alpha::TermId term;
};

TermSetup elaborate(const TermRequest& r) {
  psh::GroupPresheaf f = load_presheaf(r.presheaf_path);
  alpha::AlphaEngine eng(tj::diagram_from_presheaf(f));
  std::optional<std::size_t> at;
  if (r.at_name) {
    at = f.base.object_index(*r.at_name);
    if (!at) throw io::SchemaError("unknown object '" + *r.at_name + "'");
  }
  alpha::TermId t = sx::parse_alpha_term(eng, r.source, at);
  return TermSetup{std::move(f), std::move(eng), t};
}

// ---- subcommands --------------------------------------------------------

json cmd_validate(const std::string& path) {
  json j = io::load_json_file(path);
  io::FileKind kind = io::detect_kind(j);
  ValidationReport rep;
  switch (kind) {
    case io::FileKind::Category:
      rep = cat::check_category(io::category_from_json(j));
      break;
    case io::FileKind::Group:
      rep = grp::check_group(io::group_from_json(j));
      break;
    case io::FileKind::Presheaf:
      rep = psh::check_presheaf(io::presheaf_from_file(path));
      break;
    case io::FileKind::Theory:
      rep = phl::check_theory_wf(io::theory_from_json(j));
      break;
    case io::FileKind::Structure: {
      if (!j.contains("theory"))
        throw io::SchemaError(path + ": validating a structure needs a "
                              "'theory' ref in the file");
      phl::Theory t = load_theory(resolve(path, jstr(j.at("theory"), "ref")));
      rep = phl::check_structure(io::structure_from_json(j, t.signature));
      break;
    }
    case io::FileKind::NatTrans: {
      if (!j.contains("presheaf"))
        throw io::SchemaError(path + ": validating a transformation needs a "
                              "'presheaf' ref in the file");
      psh::GroupPresheaf f =
          load_presheaf(resolve(path, jstr(j.at("presheaf"), "ref")));
      psh::NatTrans t{&f, &f, io::components_from_json(j, f)};
      rep = psh::check_nat_trans(t);
      break;
    }
    case io::FileKind::Term:
      sx::parse(j.is_string() ? j.get<std::string>()
                              : jstr(j.at("term"), "term"));
      break;
    case io::FileKind::Unknown:
      throw io::SchemaError(path + ": unrecognized file kind");
  }
  json result{{"kind", io::kind_name(kind)},
              {"ok", rep.ok()},
              {"issues", io::report_to_json(rep)}};
  if (!rep.ok()) throw Failure{result};
  return result;
}

json cmd_aut_id(const std::string& path) {
  cat::FinCategory c = load_category(path);
  cat::IdAutGroup a = cat::aut_identity_functor(c);
  json elems = json::array();
  for (const auto& e : a.elements) elems.push_back(psi_json(c, e));
  return json{{"order", a.order()}, {"elements", elems}};
}

json cmd_limit(const std::string& path) {
  psh::GroupPresheaf f = load_presheaf(path);
  auto lim = psh::limit_of_diagram(f);
  json elems = json::array();
  for (const auto& t : lim) elems.push_back(tuple_json(f, t));
  return json{{"order", lim.size()}, {"elements", elems}};
}

json cmd_nat_auts(const std::string& path) {
  psh::GroupPresheaf f = load_presheaf(path);
  auto auts = psh::nat_auts(f);
  json elems = json::array();
  for (const auto& t : auts) elems.push_back(components_json(f, t.component));
  return json{{"order", auts.size()}, {"elements", elems}};
}

json cmd_isotropy(const std::string& path) {
  psh::GroupPresheaf f = load_presheaf(path);
  iso::IsotropyGroup z = iso::isotropy_group(f);
  json elems = json::array();
  for (const auto& e : z.elements) elems.push_back(element_json(e));
  json gens = json::array();
  for (std::size_t i : grp::generating_set(materialize(z)))
    gens.push_back(element_json(z.elements[i]));
  return json{{"order", z.order()},
              {"limit_order", z.lim.size()},
              {"aut_id_order", z.aut_id.order()},
              {"generators", gens},
              {"elements", elems}};
}

json cmd_is_inner(const std::string& presheaf_path,
                  const std::string& nat_path) {
  psh::GroupPresheaf f = load_presheaf(presheaf_path);
  json nj = io::load_json_file(nat_path);
  psh::NatTrans pi{&f, &f, io::components_from_json(nj, f)};
  require_valid(psh::check_nat_trans(pi), nat_path);
  std::vector<iso::InnerWitness> ws;
  try {
    ws = iso::inner_witnesses(f, pi);
  } catch (const phl::InputError& e) {
    throw Failure{json{{"file", nat_path}, {"error", e.what()}}};
  }
  json witnesses = json::array();
  for (const auto& w : ws)
    witnesses.push_back(
        json{{"g", tuple_json(f, w.g)}, {"psi", psi_json(f.base, w.psi)}});
  return json{{"inner", !ws.empty()},
              {"count", ws.size()},
              {"witnesses", witnesses}};
}

json cmd_isotropy_search(const std::string& path, std::size_t max_len,
                         unsigned jobs) {
  grp::FinGroup g = load_group(path);
  fp::IsotropySearchResult res = fp::isotropy_search(g, max_len, jobs);
  json elems = json::array();
  for (const auto& e : res.elements)
    elems.push_back(json{{"word", io::word_to_json(g, e.word)},
                         {"inverse", io::word_to_json(g, e.inverse)},
                         {"show", fp::show(g, e.word)}});
  return json{{"group_order", g.order()},
              {"max_len", res.max_len},
              {"count", res.elements.size()},
              {"elements", elems}};
}

json cmd_build_tj(const std::string& theory_path,
                  const std::string& cat_path) {
  phl::Theory t = load_theory(theory_path);
  cat::FinCategory c = load_category(cat_path);
  tj::TJTheory tjt = tj::build_tj(t, c);
  json j = io::theory_to_json(tjt.theory);
  j["meta"] = json{{"sorts", tjt.theory.signature.sorts.size()},
                   {"funs", tjt.theory.signature.funs.size()},
                   {"axioms",
                    json{{"totality", tjt.counts.totality},
                         {"identity", tjt.counts.identity},
                         {"composition", tjt.counts.composition},
                         {"hom", tjt.counts.hom},
                         {"translated", tjt.counts.translated},
                         {"total", tjt.counts.total()}}}};
  return j;
}

json cmd_check_model(const std::string& structure_path,
                     const std::string& theory_path) {
  phl::Theory t = load_theory(theory_path);
  json sj = io::load_json_file(structure_path);
  phl::PartialStructure m = io::structure_from_json(sj, t.signature);
  require_valid(phl::check_structure(m), structure_path);
  phl::ModelReport rep = phl::check_model(m, t);
  json failures = json::array();
  for (const auto& fl : rep.failures) {
    json f{{"axiom", fl.axiom_name.empty() ? std::to_string(fl.axiom)
                                           : fl.axiom_name},
           {"assignment", phl::describe(m, fl.witness)}};
    if (fl.failed_equation) f["equation"] = *fl.failed_equation;
    failures.push_back(std::move(f));
  }
  json result{{"ok", rep.ok},
              {"axioms_checked", rep.axioms_checked},
              {"failures", failures}};
  if (!rep.ok) throw Failure{result};
  return result;
}

json cmd_normalize(const TermRequest& r) {
  TermSetup s = elaborate(r);
  alpha::TermId nf = s.eng.normalize(s.term);
  return json{{"object", s.f.base.objects[s.eng.object_of(s.term)]},
              {"input", s.eng.show(s.term)},
              {"normal_form", s.eng.show(nf)},
              {"alpha_restricted", s.eng.alpha_restricted(nf)},
              {"size", s.eng.term_size(nf)}};
}

json cmd_theta(const TermRequest& r, bool star, bool normalize_first) {
  TermSetup s = elaborate(r);
  alpha::TermId t = s.term;
  if (!s.eng.alpha_restricted(t)) {
    if (normalize_first)
      t = s.eng.normalize(t);
    else
      throw Failure{json{{"error",
                          "term is not alpha-restricted; pass --normalize"},
                         {"term", s.eng.show(t)}}};
  }
  std::size_t obj = s.eng.object_of(t);
  alpha::BaseTerm bt = star ? s.eng.theta_star(t) : s.eng.theta(t);
  json result{{"object", s.f.base.objects[obj]},
              {"term", s.eng.show(t)}};
  result[star ? "theta_star" : "theta"] = s.eng.show_base(bt, obj);
  return result;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"covariant isotropy of presheaves of finite groups", "isokit"};
  app.require_subcommand(1);

  std::string file, file2, presheaf_opt, at_opt;
  std::size_t max_len = 3;
  unsigned jobs = 1;
  bool normalize_first = false;

  CLI::App* validate =
      app.add_subcommand("validate", "Check a workspace file (kind detected)");
  validate->add_option("file", file, "file to validate")->required();

  CLI::App* aut_id = app.add_subcommand(
      "aut-id", "Automorphisms of the identity functor of a category");
  aut_id->add_option("category", file, "category file")->required();

  CLI::App* limit =
      app.add_subcommand("limit", "Limit of a presheaf of groups");
  limit->add_option("presheaf", file, "presheaf file")->required();

  CLI::App* nat_auts =
      app.add_subcommand("nat-auts", "Natural automorphisms of a presheaf");
  nat_auts->add_option("presheaf", file, "presheaf file")->required();

  CLI::App* isotropy = app.add_subcommand(
      "isotropy", "Isotropy group of a presheaf: limit x Aut(Id)");
  isotropy->add_option("presheaf", file, "presheaf file")->required();

  CLI::App* is_inner = app.add_subcommand(
      "is-inner", "Decide whether a natural automorphism is inner");
  is_inner->add_option("presheaf", file, "presheaf file")->required();
  is_inner->add_option("nat-trans", file2, "transformation file")->required();

  CLI::App* search = app.add_subcommand(
      "isotropy-search",
      "Invertible generically-commuting words over a free extension");
  search->add_option("group", file, "group file")->required();
  search->add_option("--max-len", max_len, "syllable bound (default 3)");
  search->add_option("--jobs", jobs, "worker count (default 1)");

  CLI::App* build_tj = app.add_subcommand(
      "build-tj", "Translate a theory along a finite category");
  build_tj->add_option("theory", file, "theory file")->required();
  build_tj->add_option("category", file2, "category file")->required();

  CLI::App* check_model =
      app.add_subcommand("check-model", "Check a structure against a theory");
  check_model->add_option("structure", file, "structure file")->required();
  check_model->add_option("theory", file2, "theory file")->required();

  auto add_term_opts = [&](CLI::App* c) {
    c->add_option("term", file, "term file or s-expression")->required();
    c->add_option("--presheaf", presheaf_opt, "presheaf file");
    c->add_option("--at", at_opt, "object carrying the term");
  };

  CLI::App* normalize = app.add_subcommand(
      "normalize", "Normal form of a term over a presheaf's diagram");
  add_term_opts(normalize);

  CLI::App* theta = app.add_subcommand(
      "theta", "Subscripted base term of an alpha-restricted term");
  add_term_opts(theta);
  theta->add_flag("--normalize", normalize_first, "normalize first");

  CLI::App* theta_star = app.add_subcommand(
      "theta-star", "Subscript-erased base term of an alpha-restricted term");
  add_term_opts(theta_star);
  theta_star->add_flag("--normalize", normalize_first, "normalize first");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", e.what()}}.dump(2) << "\n";
    return 2;
  }

  try {
    json result;
    if (validate->parsed()) result = cmd_validate(file);
    else if (aut_id->parsed()) result = cmd_aut_id(file);
    else if (limit->parsed()) result = cmd_limit(file);
    else if (nat_auts->parsed()) result = cmd_nat_auts(file);
    else if (isotropy->parsed()) result = cmd_isotropy(file);
    else if (is_inner->parsed()) result = cmd_is_inner(file, file2);
    else if (search->parsed()) result = cmd_isotropy_search(file, max_len, jobs);
    else if (build_tj->parsed()) result = cmd_build_tj(file, file2);
    else if (check_model->parsed()) result = cmd_check_model(file, file2);
    else if (normalize->parsed())
      result = cmd_normalize(term_request(file, presheaf_opt, at_opt));
    else if (theta->parsed())
      result = cmd_theta(term_request(file, presheaf_opt, at_opt), false,
                         normalize_first);
    else if (theta_star->parsed())
      result = cmd_theta(term_request(file, presheaf_opt, at_opt), true,
                         normalize_first);
    out << result.dump(2) << "\n";
    return 0;
  } catch (const Failure& f) {
    err << f.detail.dump(2) << "\n";
    return 1;
  } catch (const io::SchemaError& e) {
    err << json{{"error", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const phl::InputError& e) {
    err << json{{"error", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << json{{"error", e.what()}}.dump(2) << "\n";
    return 2;
  }
}

}  // namespace isokit::cli
