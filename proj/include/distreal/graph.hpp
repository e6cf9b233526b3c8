#pragma once

// Undirected weighted graphs with integer node ids, plus the small amount of
// graph theory the realizer needs: exact all-pairs shortest paths, cyclomatic
// number, unique-cycle extraction and zero-weight pendant contraction. All
// containers are ordered so every traversal is deterministic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "distreal/errors.hpp"
#include "distreal/matrix.hpp"

namespace distreal {

enum class NodeKind { leaf, internal };  // leaf = label from the input matrix

class WeightedGraph {
 public:
  using EdgeKey = std::pair<Label, Label>;  // always (min, max)

  static EdgeKey key(Label u, Label v) { return {std::min(u, v), std::max(u, v)}; }

  void add_node(Label id, NodeKind kind = NodeKind::internal) {
    auto [it, inserted] = nodes_.emplace(id, kind);
    if (!inserted && it->second != kind)
      throw InternalError("node " + std::to_string(id) + " re-added with different kind");
  }

  bool has_node(Label id) const { return nodes_.count(id) != 0; }

  NodeKind kind(Label id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw DomainError("no node " + std::to_string(id));
    return it->second;
  }

  void set_kind(Label id, NodeKind k) {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw DomainError("no node " + std::to_string(id));
    it->second = k;
  }

  void add_edge(Label u, Label v, Rational w) {
    if (u == v) throw DomainError("self loop on node " + std::to_string(u));
    if (!has_node(u) || !has_node(v))
      throw DomainError("edge endpoints must exist: " + std::to_string(u) + "," +
                        std::to_string(v));
    if (w.sign() < 0) throw DomainError("negative edge weight " + w.str());
    auto [it, inserted] = edges_.emplace(key(u, v), std::move(w));
    if (!inserted)
      throw InternalError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }

  bool has_edge(Label u, Label v) const { return edges_.count(key(u, v)) != 0; }

  void remove_edge(Label u, Label v) {
    if (edges_.erase(key(u, v)) == 0)
      throw DomainError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  }

  const Rational& weight(Label u, Label v) const {
    auto it = edges_.find(key(u, v));
    if (it == edges_.end())
      throw DomainError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    return it->second;
  }

  // Rename a node; `to` must be unused. Edges follow.
  void rename_node(Label from, Label to) {
    if (from == to) return;
    auto it = nodes_.find(from);
    if (it == nodes_.end()) throw DomainError("no node " + std::to_string(from));
    if (has_node(to))
      throw InternalError("rename target " + std::to_string(to) + " already exists");
    NodeKind k = it->second;
    nodes_.erase(it);
    nodes_.emplace(to, k);
    std::vector<std::pair<EdgeKey, Rational>> moved;
    for (auto eit = edges_.begin(); eit != edges_.end();) {
      if (eit->first.first == from || eit->first.second == from) {
        Label a = eit->first.first == from ? to : eit->first.first;
        Label b = eit->first.second == from ? to : eit->first.second;
        moved.emplace_back(key(a, b), std::move(eit->second));
        eit = edges_.erase(eit);
      } else {
        ++eit;
      }
    }
    for (auto& [k2, w] : moved)
      if (!edges_.emplace(k2, std::move(w)).second)
        throw InternalError("rename created a duplicate edge at " + std::to_string(to));
  }

  std::vector<Label> neighbors(Label id) const {
    std::vector<Label> out;
    for (const auto& [k, w] : edges_) {
      if (k.first == id) out.push_back(k.second);
      else if (k.second == id) out.push_back(k.first);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int degree(Label id) const { return static_cast<int>(neighbors(id).size()); }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::map<Label, NodeKind>& nodes() const { return nodes_; }
  const std::map<EdgeKey, Rational>& edges() const { return edges_; }

  Rational total_weight() const {
    Rational t;
    for (const auto& [k, w] : edges_) t += w;
    return t;
  }

  int components() const {
    if (nodes_.empty()) return 0;
    std::set<Label> seen;
    int comps = 0;
    for (const auto& [id, kind] : nodes_) {
      if (seen.count(id)) continue;
      ++comps;
      std::vector<Label> stack{id};
      seen.insert(id);
      while (!stack.empty()) {
        Label cur = stack.back();
        stack.pop_back();
        for (Label nb : neighbors(cur))
          if (seen.insert(nb).second) stack.push_back(nb);
      }
    }
    return comps;
  }

  // Independent cycles: |E| - |V| + components. 0 = forest, 1 = unicyclic.
  int cyclomatic() const {
    return static_cast<int>(edges_.size()) - static_cast<int>(nodes_.size()) + components();
  }

  // For a unicyclic graph, the cycle's node sequence anchored at the smallest
  // id and oriented toward its smaller neighbor. nullopt unless cyclomatic()
  // is exactly 1.
  std::optional<std::vector<Label>> unique_cycle() const {
    if (cyclomatic() != 1) return std::nullopt;
    std::map<Label, std::set<Label>> adj;
    for (const auto& [k, w] : edges_) {
      adj[k.first].insert(k.second);
      adj[k.second].insert(k.first);
    }
    // Peel leaves until only the cycle remains.
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = adj.begin(); it != adj.end();) {
        if (it->second.size() <= 1) {
          for (Label nb : it->second) adj[nb].erase(it->first);
          it = adj.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
    }
    if (adj.empty()) return std::nullopt;
    Label start = adj.begin()->first;  // smallest remaining id
    std::vector<Label> seq{start};
    Label prev = start;
    Label cur = *adj[start].begin();  // smaller neighbor
    while (cur != start) {
      seq.push_back(cur);
      const auto& ns = adj[cur];
      Label next = -1;
      for (Label nb : ns)
        if (nb != prev) {
          next = nb;
          break;
        }
      if (next < 0) return std::nullopt;  // defensive: not a clean cycle
      prev = cur;
      cur = next;
    }
    return seq;
  }

  // Merge away zero-weight pendant edges: the degree-1 endpoint's id and kind
  // take over the inner node. Repeats until none remain.
  void contract_zero_pendants() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [k, w] : edges_) {
        if (!w.is_zero()) continue;
        Label a = k.first, b = k.second;
        Label pendant, inner;
        if (degree(a) == 1) pendant = a, inner = b;
        else if (degree(b) == 1) pendant = b, inner = a;
        else
          throw InternalError("zero-weight edge " + std::to_string(a) + "-" +
                              std::to_string(b) + " is not a pendant edge");
        NodeKind pk = kind(pendant);
        edges_.erase(key(a, b));
        nodes_.erase(pendant);
        rename_node(inner, pendant);
        set_kind(pendant, pk);
        changed = true;
        break;  // edge map changed; restart scan
      }
    }
  }

  friend bool operator==(const WeightedGraph& x, const WeightedGraph& y) {
    return x.nodes_ == y.nodes_ && x.edges_ == y.edges_;
  }

 private:
  std::map<Label, NodeKind> nodes_;
  std::map<EdgeKey, Rational> edges_;
};

// Exact all-pairs shortest paths (Floyd-Warshall) over every node, ascending
// id order. Throws DomainError if the graph is disconnected or empty.
inline LabeledMatrix apsp(const WeightedGraph& g) {
  if (g.node_count() == 0) throw DomainError("shortest paths of an empty graph");
  if (g.components() != 1) throw DomainError("graph is disconnected");
  std::vector<Label> ids;
  ids.reserve(g.node_count());
  for (const auto& [id, kind] : g.nodes()) ids.push_back(id);
  const int n = static_cast<int>(ids.size());
  std::map<Label, int> ix;
  for (int i = 0; i < n; ++i) ix[ids[i]] = i;
  std::vector<Rational> dist(static_cast<std::size_t>(n) * n);
  std::vector<char> reach(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> Rational& { return dist[static_cast<std::size_t>(i) * n + j]; };
  auto rc = [&](int i, int j) -> char& { return reach[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) rc(i, i) = 1;
  for (const auto& [k, w] : g.edges()) {
    int a = ix[k.first], b = ix[k.second];
    if (!rc(a, b) || w < at(a, b)) {
      at(a, b) = w;
      at(b, a) = w;
      rc(a, b) = rc(b, a) = 1;
    }
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!rc(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (!rc(k, j)) continue;
        Rational via = at(i, k) + at(k, j);
        if (!rc(i, j) || via < at(i, j)) {
          at(i, j) = std::move(via);
          rc(i, j) = 1;
        }
      }
    }
  LabeledMatrix out = LabeledMatrix::zeros(ids);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = at(i, j);
  return out;
}

inline Rational total_weight(const WeightedGraph& g) { return g.total_weight(); }

}  // namespace distreal
