#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sagbi_forge/edge_rings.hpp"
#include "sagbi_forge/errors.hpp"
#include "sagbi_forge/groebner.hpp"
#include "sagbi_forge/posets.hpp"
#include "sagbi_forge/toric.hpp"

namespace sagbi_forge {

using Json = nlohmann::ordered_json;

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

/// {"vertices": d, "edges": [[i, j], ...]}, 1-indexed.
inline Graph graph_from_json(const Json& j) {
  try {
    std::vector<Graph::Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair of vertices");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j.at("vertices").get<int>(), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

inline Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (auto [lo, up] : p.covers()) covers.push_back({p.label(lo), p.label(up)});
  return Json{{"elements", p.labels()}, {"covers", covers}};
}

/// {"elements": [labels], "covers": [[lower, upper], ...]}.
inline Poset poset_from_json(const Json& j) {
  try {
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw ParseError("cover must be a pair of labels");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return Poset::from_labels(j.at("elements").get<std::vector<std::string>>(), covers);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("poset JSON: ") + e.what());
  }
}

/// Member labels in the poset's element order.
inline Json to_json(const Poset& p, const PosetIdeal& ideal) {
  Json out = Json::array();
  for (auto m : ideal.members) out.push_back(p.label(m));
  return out;
}

inline Json to_json(const PointConfiguration& a) {
  return Json{{"points", a.points()}, {"labels", a.labels()}};
}

inline PointConfiguration configuration_from_json(const Json& j) {
  try {
    auto pts = j.at("points").get<std::vector<IntVector>>();
    if (j.contains("labels")) return PointConfiguration(std::move(pts), j.at("labels").get<std::vector<std::string>>());
    return PointConfiguration(std::move(pts));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("configuration JSON: ") + e.what());
  }
}

template <class K>
Json to_json(const GroebnerBasis<K>& gb) {
  return Json(gb.to_strings());
}

inline Json to_json(const VerificationReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json step{{"name", s.name}, {"pass", s.pass}, {"ms", nullptr}, {"witness", nullptr}};
    if (s.ms) step["ms"] = *s.ms;
    if (s.witness) step["witness"] = *s.witness;
    steps.push_back(std::move(step));
  }
  Json out{{"a", r.a}, {"b", r.b}, {"steps", steps}, {"dimension", nullptr},
           {"gorenstein_expected", r.gorenstein_expected}, {"graded", r.graded}, {"field", r.field}};
  if (r.dimension) out["dimension"] = *r.dimension;
  return out;
}

}  // namespace sagbi_forge
