#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "isokit/fincat.hpp"
#include "isokit/fingroup.hpp"
#include "isokit/freeword.hpp"
#include "isokit/phl.hpp"
#include "isokit/presheaf.hpp"
#include "isokit/validation.hpp"

// Workspace file formats.  All keys are emitted in sorted order (the default
// nlohmann object is key-sorted) and arrays follow declared element order,
// so outputs are byte-stable.
//
//   group      {"elements": [...], "unit": "e", "mul": [[names...], ...]}
//   category   {"objects": [...], "morphisms": [{"name","dom","cod"}, ...],
//               "identities": {obj: mor}, "composition": [[g, f, gf], ...]}
//   presheaf   {"category": ref, "on_objects": {obj: ref},
//               "on_morphisms": {mor: {elem: elem}}}   (identity morphisms
//               may be omitted; refs are paths relative to the file)
//   nat-trans  {"presheaf": ref?, "components": {obj: {elem: elem}}}
//   theory     {"sorts": [...], "funs": [{"name","args","result"}, ...],
//               "axioms": [{"name", "context": [{"var","sort"}],
//                           "if": [[lhs, rhs], ...], "then": [[lhs, rhs], ...]}]}
//              (equations are pairs of term strings; t↓ is written [t, t])
//   structure  {"theory": ref?, "carriers": {sort: [...]},
//               "ops": {fun: [[[args...], value], ...]}}
//   term       "(m@i x c:s)"  or  {"term": "...", "at": obj?, "presheaf": ref?}
//   word       [{"g": name} | {"x": exp}, ...]

namespace isokit::io {

using json = nlohmann::json;

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path);

enum class FileKind { Category, Group, Presheaf, Theory, Structure, NatTrans, Term, Unknown };
FileKind detect_kind(const json& j);
std::string kind_name(FileKind k);

grp::FinGroup group_from_json(const json& j);
json group_to_json(const grp::FinGroup& g);

cat::FinCategory category_from_json(const json& j);
json category_to_json(const cat::FinCategory& c);

psh::GroupPresheaf presheaf_from_file(const std::string& path);

// Per-object element maps of a transformation F → F.
std::vector<grp::ElemMap> components_from_json(const json& j,
                                               const psh::GroupPresheaf& f);

phl::Theory theory_from_json(const json& j);
json theory_to_json(const phl::Theory& t);

phl::PartialStructure structure_from_json(const json& j,
                                          const phl::Signature& sig);

fp::Word word_from_json(const grp::FinGroup& g, const json& j);
json word_to_json(const grp::FinGroup& g, const fp::Word& w);

json report_to_json(const ValidationReport& r);

}  // namespace isokit::io
