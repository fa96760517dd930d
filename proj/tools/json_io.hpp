#pragma once

// JSON forms of quivers, complexes and representations (schema "1").
//
// Quiver:  {"schema":"1", "name":..., "vertices":[...],
//           "arrows":[{"name","src","tgt"}], "relations":[[{"coef":"a/b","path":[...]}]]}
// Complex: {"schema":"1", "algebra": "F3" | {"name":"F","m":3} | inline quiver,
//           "degrees": {"i": {"vertex": multiplicity}},
//           "differentials": {"i": rows x cols grid of term lists}}
//   Summands of a degree are ordered by vertex, then the grid of degree i has
//   one row per summand of degree i and one column per summand of degree i+1.
//   A term is {"coef":"a/b","path":[arrow names]}; trivial paths add "vertex".
// Rep:     {"schema":"1", "quiver": "W1", "dims": {"vertex": n},
//           "arrows": {"name": [[entries]]}}, arrow s -> t is dim_s x dim_t.
// Errors are Error("schema-violation") naming the JSON pointer.

#include "schurder/catalog.hpp"
#include "schurder/complexes.hpp"

#include <json.hpp>

namespace schurder::io {

using nlohmann::json;

json quiver_json(const std::string& name, const Quiver& q, const std::vector<PathCombination>& relations);

/// An algebra reference: a catalog label ("A2", "F3", "D4", ...), an object
/// {"name","m"}, or an inline presentation. Inline algebras are kept alive
/// for the lifetime of the process.
const Algebra& algebra_from_json(const json& j, const std::string& pointer = "/algebra");
/// Splits a label such as "F3" into ("F", 3); fixed names get m = 0.
std::pair<std::string, int> parse_label(const std::string& label);

json element_json(const Algebra& alg, const Element& e);
Element element_from_json(const Algebra& alg, const json& j, int src, int tgt, const std::string& pointer);

/// Summands reordered by vertex, so the output is a normal form.
json complex_json(const std::string& algebra_label, const Algebra& alg, const ProjComplex& c);
ProjComplex complex_from_json(const Algebra& alg, const json& j);

json rep_json(const std::string& quiver_label, const Quiver& q, const ModuleRep& m);
ModuleRep rep_from_json(const Quiver& q, const json& j);

json matrix_json(const MatQ& m);

json read_file(const std::string& path);

}  // namespace schurder::io
