#pragma once

// Graph serialization: JSON (round-trippable), DOT and GraphML (export only).
// Output is canonical — nodes ascending, edges as (min,max) ascending — so
// identical graphs always serialize to identical bytes.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "distreal/errors.hpp"
#include "distreal/graph.hpp"

namespace distreal {

enum class GraphFormat { json, dot, graphml };

inline const char* kind_name(NodeKind k) {
  return k == NodeKind::leaf ? "leaf" : "internal";
}

// {"status", "nodes", "edges", "cycle"?, "total_weight"}; status is derived
// from the cyclomatic number ("tree" or "genus1"), cycle present only for
// genus1. Weights are rational strings.
inline nlohmann::ordered_json graph_to_json(const WeightedGraph& g) {
  nlohmann::ordered_json j;
  const int cyc = g.cyclomatic();
  j["status"] = cyc == 0 ? "tree" : (cyc == 1 ? "genus1" : "genus" + std::to_string(cyc));
  auto nodes = nlohmann::ordered_json::array();
  for (const auto& [id, kind] : g.nodes())
    nodes.push_back({{"id", id}, {"kind", kind_name(kind)}});
  j["nodes"] = std::move(nodes);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [k, w] : g.edges())
    edges.push_back({{"u", k.first}, {"v", k.second}, {"w", w.str()}});
  j["edges"] = std::move(edges);
  if (cyc == 1)
    if (auto cycle = g.unique_cycle()) j["cycle"] = *cycle;
  j["total_weight"] = g.total_weight().str();
  return j;
}

inline WeightedGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
    throw ParseError("graph JSON must be an object with 'nodes' and 'edges'");
  WeightedGraph g;
  for (const auto& nd : j["nodes"]) {
    if (!nd.contains("id") || !nd["id"].is_number_integer())
      throw ParseError("graph node without integer 'id'");
    NodeKind k = NodeKind::internal;
    if (nd.contains("kind")) {
      std::string ks = nd["kind"].get<std::string>();
      if (ks == "leaf") k = NodeKind::leaf;
      else if (ks == "internal") k = NodeKind::internal;
      else throw ParseError("unknown node kind '" + ks + "'");
    }
    g.add_node(nd["id"].get<Label>(), k);
  }
  for (const auto& ed : j["edges"]) {
    if (!ed.contains("u") || !ed.contains("v") || !ed.contains("w"))
      throw ParseError("graph edge needs 'u', 'v', 'w'");
    auto w = Rational::parse(ed["w"].get<std::string>());
    if (!w) throw ParseError("bad edge weight '" + ed["w"].get<std::string>() + "'");
    g.add_edge(ed["u"].get<Label>(), ed["v"].get<Label>(), *w);
  }
  return g;
}

inline WeightedGraph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

inline std::string graph_to_dot(const WeightedGraph& g) {
  std::string out = "graph realization {\n";
  for (const auto& [id, kind] : g.nodes()) {
    out += "  " + std::to_string(id);
    if (kind == NodeKind::internal) out += " [shape=point]";
    out += ";\n";
  }
  for (const auto& [k, w] : g.edges())
    out += "  " + std::to_string(k.first) + " -- " + std::to_string(k.second) +
           " [label=\"" + w.str() + "\"];\n";
  out += "}\n";
  return out;
}

inline std::string graph_to_graphml(const WeightedGraph& g) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      "  <key id=\"w\" for=\"edge\" attr.name=\"w\" attr.type=\"string\"/>\n"
      "  <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n"
      "  <graph id=\"realization\" edgedefault=\"undirected\">\n";
  for (const auto& [id, kind] : g.nodes())
    out += "    <node id=\"n" + std::to_string(id) + "\"><data key=\"kind\">" +
           kind_name(kind) + "</data></node>\n";
  for (const auto& [k, w] : g.edges())
    out += "    <edge source=\"n" + std::to_string(k.first) + "\" target=\"n" +
           std::to_string(k.second) + "\"><data key=\"w\">" + w.str() + "</data></edge>\n";
  out += "  </graph>\n</graphml>\n";
  return out;
}

inline std::string export_graph(const WeightedGraph& g, GraphFormat f) {
  switch (f) {
    case GraphFormat::json: return graph_to_json(g).dump(2) + "\n";
    case GraphFormat::dot: return graph_to_dot(g);
    case GraphFormat::graphml: return graph_to_graphml(g);
  }
  throw DomainError("unknown graph format");
}

}  // namespace distreal
