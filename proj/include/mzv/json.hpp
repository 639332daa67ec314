#pragma once

// JSON encodings.  Objects use nlohmann::json's sorted keys, combinations are
// written in canonical term order, so output is byte-for-byte reproducible.
//
//   combination: [{"coefficient": "p/q", "factors": [[3,1], [2]]}, ...]
//   identity:    {"family", "parameters", "variant", "combination",
//                 "regularized", "final", "derivation", "text"}
//   diagram:     {"vertices": [ids], "root": id, "edges": [{"from","to","label"}]}
//   report:      {"identity", "residual", "bound", "pass", "terms"}

#include "mzv/diagrams.hpp"
#include "mzv/identities.hpp"
#include "mzv/linalg.hpp"
#include "mzv/numerics.hpp"
#include "mzv/verify.hpp"

#include <json.hpp>

#include <string>

namespace mzv {

using Json = nlohmann::json;

inline Json to_json(const ZetaCombination& c) {
  Json arr = Json::array();
  for (const auto& [factors, coeff] : c.map()) arr.push_back({{"coefficient", to_fraction_string(coeff)}, {"factors", factors}});
  return arr;
}

inline ZetaCombination combination_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("combination must be a JSON array");
  ZetaCombination c;
  for (const auto& t : j) {
    const auto coeff = parse_fraction(t.at("coefficient").get<std::string>());
    std::vector<Parts> factors;
    for (const auto& f : t.at("factors")) {
      Parts p = f.get<Parts>();
      if (p.empty()) throw std::invalid_argument("empty factor in combination");
      for (int k : p)
        if (k < 1) throw std::invalid_argument("combination parts must be >= 1");
      factors.push_back(std::move(p));
    }
    c.add(std::move(factors), coeff);
  }
  return c;
}

inline Json to_json(const Identity& id) {
  Json j;
  j["family"] = id.family;
  j["parameters"] = id.parameters;
  if (id.variant != Variant::None) j["variant"] = to_string(id.variant);
  j["combination"] = to_json(id.combination);
  j["regularized"] = id.regularized();
  j["final"] = id.final_family;
  j["derivation"] = id.derivation;
  j["text"] = format_combination(id.combination) + " = 0";
  return j;
}

inline Identity identity_from_json(const Json& j) {
  Identity id;
  id.combination = combination_from_json(j.at("combination"));
  id.family = j.value("family", std::string("custom"));
  if (j.contains("parameters")) id.parameters = j.at("parameters").get<std::vector<Parts>>();
  if (j.contains("variant")) id.variant = parse_variant(j.at("variant").get<std::string>());
  id.final_family = j.value("final", false);
  if (j.contains("derivation")) id.derivation = j.at("derivation").get<std::vector<std::string>>();
  return id;
}

inline Json to_json(const Diagram& d) {
  Json edges = Json::array();
  for (const auto& e : d.edges()) edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  return {{"vertices", Json(std::vector<int>(d.vertices().begin(), d.vertices().end()))},
          {"root", d.root()},
          {"edges", edges}};
}

inline Diagram diagram_from_json(const Json& j) {
  Diagram d(j.at("root").get<int>());
  for (int v : j.at("vertices").get<std::vector<int>>()) d.add_vertex(v);
  for (const auto& e : j.at("edges")) d.add_edge(e.at("from").get<int>(), e.at("to").get<int>(), e.at("label").get<int>());
  return d;
}

inline Json to_json(const PrecisionValue& v, int digits = 30) {
  return {{"value", to_decimal(v.value, digits)}, {"bound", to_decimal(v.bound, 6)}};
}

inline Json to_json(const IdentityReport& r) {
  Json terms = Json::array();
  for (const auto& [t, v] : r.report.term_values) terms.push_back({{"term", t}, {"value", to_decimal(v, 25)}});
  return {{"identity", r.identity},
          {"residual", to_decimal(r.report.residual, 6)},
          {"bound", to_decimal(r.report.bound, 6)},
          {"pass", r.report.pass},
          {"terms", terms}};
}

inline Json to_json(const BasisReport& r) {
  Json expr = Json::array();
  for (const auto& [u, e] : r.expressions)
    expr.push_back({{"unknown", format_symbol_parts(u)}, {"expression", format_combination(e)}});
  Json basis = Json::array();
  for (const auto& b : r.basis) basis.push_back(format_symbol_parts(b));
  return {{"length", r.length}, {"rows", r.rows},   {"unknowns", r.unknowns},   {"rank", r.rank},
          {"canonical", r.canonical}, {"basis", basis}, {"expressions", expr}};
}

}  // namespace mzv
