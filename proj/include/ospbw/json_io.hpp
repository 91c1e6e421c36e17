#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ospbw/jacobi.hpp"
#include "ospbw/superspace.hpp"

namespace ospbw {

using Json = nlohmann::json;

struct JsonFormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::string rational_to_string(const Rational& r) { return r.str(); }

inline Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw JsonFormatError("bad rational literal: " + s);
  }
}

// ArcDiagram <-> {"upper": k, "lower": l, "arcs": [[a,b],...]}
// The class canonicalizes arcs (ascending pairs, sorted), so emitted JSON
// is already in wire order.

inline Json arc_diagram_to_json(const ArcDiagram& d) {
  Json arcs = Json::array();
  for (const auto& [a, b] : d.arcs()) arcs.push_back(Json::array({a, b}));
  return Json{{"upper", d.upper()}, {"lower", d.lower()}, {"arcs", arcs}};
}

inline ArcDiagram arc_diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("upper") || !j.contains("lower") ||
      !j.contains("arcs") || !j["arcs"].is_array())
    throw JsonFormatError("arc diagram: expected upper/lower/arcs");
  std::vector<std::pair<int, int>> arcs;
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2)
      throw JsonFormatError("arc diagram: each arc is a pair");
    arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  return ArcDiagram(j["upper"].get<int>(), j["lower"].get<int>(),
                    std::move(arcs));
}

// Morphism <-> {"upper", "lower", "terms": [{"coeff": [["num","den"],...],
// "diagram": {...}}]} with coeff listing ascending powers of t. Terms are
// sorted by diagram for reproducible output.

inline Json morphism_to_json(const Morphism& m) {
  std::vector<std::pair<ArcDiagram, PolyT>> terms(m.terms().begin(),
                                                  m.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return a.first.arcs() < b.first.arcs();
  });
  Json out = Json::array();
  for (const auto& [d, c] : terms) {
    Json coeff = Json::array();
    for (const auto& q : c.coeffs())
      coeff.push_back(Json::array({numerator(q).str(), denominator(q).str()}));
    out.push_back(
        Json{{"coeff", coeff}, {"diagram", arc_diagram_to_json(d)}});
  }
  return Json{{"upper", m.upper()}, {"lower", m.lower()}, {"terms", out}};
}

inline Morphism morphism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("upper") || !j.contains("lower") ||
      !j.contains("terms") || !j["terms"].is_array())
    throw JsonFormatError("morphism: expected upper/lower/terms");
  Morphism m(j["upper"].get<int>(), j["lower"].get<int>());
  for (const auto& t : j["terms"]) {
    if (!t.contains("coeff") || !t.contains("diagram"))
      throw JsonFormatError("morphism term: expected coeff/diagram");
    std::vector<Rational> cs;
    for (const auto& q : t["coeff"]) {
      if (!q.is_array() || q.size() != 2)
        throw JsonFormatError("morphism coeff: expected [num, den] pairs");
      Rational den = rational_from_string(q[1].get<std::string>());
      if (den == 0) throw JsonFormatError("morphism coeff: zero denominator");
      cs.push_back(rational_from_string(q[0].get<std::string>()) / den);
    }
    m.add_term(arc_diagram_from_json(t["diagram"]), PolyT(std::move(cs)));
  }
  return m;
}

// Pseudograph <-> {"vertices": p, "valence": e, "edges": [[i,j,label],...]}

inline Json pseudograph_to_json(const Pseudograph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back(Json::array({e.i, e.j, e.label}));
  return Json{{"vertices", g.vertices()},
              {"valence", g.valence()},
              {"edges", edges}};
}

inline Pseudograph pseudograph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("valence") ||
      !j.contains("edges") || !j["edges"].is_array())
    throw JsonFormatError("pseudograph: expected vertices/valence/edges");
  std::vector<Edge> es;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw JsonFormatError("pseudograph edge: expected [i, j, label]");
    es.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  return Pseudograph(j["vertices"].get<int>(), j["valence"].get<int>(),
                     std::move(es));
}

// Partition <-> plain array [l1, l2, ...]

inline Json partition_to_json(const Partition& p) {
  Json out = Json::array();
  for (int l : p.parts()) out.push_back(l);
  return out;
}

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw JsonFormatError("partition: expected an array");
  std::vector<int> parts;
  for (const auto& l : j) parts.push_back(l.get<int>());
  return Partition(std::move(parts));
}

// OmegaResult <-> {"e", "rho", "degree", "terms": [{"graph", "partition",
// "coeff": "num/den"}]}; the term map is ordered, so output is stable.

inline Json omega_result_to_json(const OmegaResult& r) {
  Json terms = Json::array();
  for (const auto& [key, c] : r.terms())
    terms.push_back(Json{{"graph", pseudograph_to_json(key.first)},
                         {"partition", partition_to_json(key.second)},
                         {"coeff", rational_to_string(c)}});
  return Json{{"e", r.e()},
              {"rho", r.rho()},
              {"degree", r.degree()},
              {"terms", terms}};
}

inline OmegaResult omega_result_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("e") || !j.contains("rho") ||
      !j.contains("degree") || !j.contains("terms"))
    throw JsonFormatError("omega result: expected e/rho/degree/terms");
  OmegaResult r(j["e"].get<int>(), j["rho"].get<int>(),
                j["degree"].get<int>());
  for (const auto& t : j["terms"])
    r.add_term(pseudograph_from_json(t["graph"]),
               partition_from_json(t["partition"]),
               rational_from_string(t["coeff"].get<std::string>()));
  return r;
}

// SuperMap <-> {"m", "n", "upper", "lower", "columns": [{"in": [...],
// "out": [{"idx": [...], "coeff": "num/den"}]}]}; sparse, ordered maps
// give stable output.

inline Json supermap_to_json(const SuperMap& f) {
  Json cols = Json::array();
  for (const auto& [in, v] : f.cols) {
    Json out = Json::array();
    for (const auto& [idx, c] : v) {
      if (c == 0) continue;
      out.push_back(Json{{"idx", idx}, {"coeff", rational_to_string(c)}});
    }
    if (!out.empty()) cols.push_back(Json{{"in", in}, {"out", out}});
  }
  return Json{{"m", f.sp.m},
              {"n", f.sp.n},
              {"upper", f.k},
              {"lower", f.l},
              {"columns", cols}};
}

inline SuperMap supermap_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n") ||
      !j.contains("upper") || !j.contains("lower") || !j.contains("columns"))
    throw JsonFormatError("supermap: expected m/n/upper/lower/columns");
  SuperMap f(j["upper"].get<int>(), j["lower"].get<int>(),
             SuperSpace{j["m"].get<int>(), j["n"].get<int>()});
  for (const auto& col : j["columns"]) {
    if (!col.contains("in") || !col.contains("out"))
      throw JsonFormatError("supermap column: expected in/out");
    Idx in = col["in"].get<Idx>();
    Vec v;
    for (const auto& o : col["out"])
      vec_add(v, o["idx"].get<Idx>(),
              rational_from_string(o["coeff"].get<std::string>()));
    f.add_column(in, v);
  }
  return f;
}

}  // namespace ospbw
