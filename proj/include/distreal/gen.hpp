#pragma once

// Seeded random instance generation for tests and benchmarks: weighted trees
// with labeled leaves, unicyclic ("genus 1") graphs, and bare cycles. The
// same seed always produces the same graph, metric and bytes — sampling uses
// mt19937_64 output directly (no std distributions, whose algorithms are
// implementation-defined).
//
// Trees keep every internal node at degree >= 3 and carry the labels 1..n on
// leaves, so the generated graph is the canonical realization of its own leaf
// metric and realize() must reproduce both the metric and the exact total
// weight.
//
// Cycle edge weights must satisfy the adjacency condition
//     w_i + w_{i+1} <= total/2   for every consecutive pair,
// otherwise the cycle is not the cheapest realization of its own metric. A
// triangle cannot satisfy it with positive weights (w1+w2 <= w3 and
// w2+w3 <= w1 force w2 <= 0), so cycle lengths below 4 are infeasible. For
// length 4 the condition forces opposite edges equal, so those are sampled as
// (w1, w2, w1, w2); for length L >= 5 weights k/8 with k in [8, 2L] satisfy
// it unconditionally (max pair sum 2*(2L/8) = L/2 <= total/2).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "distreal/errors.hpp"
#include "distreal/graph.hpp"
#include "distreal/matrix.hpp"

namespace distreal {

enum class GenKind { tree, genus1, cycle };

struct GenSpec {
  GenKind kind = GenKind::tree;
  int n_labels = 0;
  int cycle_len = 0;  // genus1/cycle; 0 = pick automatically
  std::uint64_t seed = 0;
};

struct GenResult {
  WeightedGraph graph;
  DistanceMatrix metric;  // shortest paths restricted to labels 1..n
  Rational total;
  std::optional<std::vector<Label>> cycle;  // canonical, when one exists
};

namespace detail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  // Uniform-ish in [0, k); modulo bias is irrelevant for test data.
  std::uint64_t below(std::uint64_t k) { return g_() % k; }
  int in(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return below(2) == 0; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 g_;
};

// Weight k/8 with k in [lo_k, hi_k]; denominators end up in {1,2,4,8}.
inline Rational eighth(Rng& rng, int lo_k, int hi_k) {
  return Rational(rng.in(lo_k, hi_k), 8);
}

inline Rational pendant_weight(Rng& rng) { return eighth(rng, 1, 16); }

// Hang every label of `bundle` below `at`, possibly through fresh internal
// nodes. Each call adds at least one edge at `at`; fresh nodes always end at
// degree >= 3.
inline void attach_bundle(WeightedGraph& g, Rng& rng, Label at,
                          const std::vector<Label>& bundle, Label& next_internal) {
  if (bundle.size() == 1) {
    g.add_node(bundle[0], NodeKind::leaf);
    g.add_edge(at, bundle[0], pendant_weight(rng));
    return;
  }
  if (rng.coin()) {  // flat fan on `at`
    for (Label b : bundle) {
      g.add_node(b, NodeKind::leaf);
      g.add_edge(at, b, pendant_weight(rng));
    }
    return;
  }
  Label m = next_internal++;
  g.add_node(m, NodeKind::internal);
  g.add_edge(at, m, pendant_weight(rng));
  if (bundle.size() <= 3 || rng.coin()) {
    for (Label b : bundle) {
      g.add_node(b, NodeKind::leaf);
      g.add_edge(m, b, pendant_weight(rng));
    }
    return;
  }
  // Split into two parts of size >= 2 and recurse onto m.
  int cut = rng.in(2, static_cast<int>(bundle.size()) - 2);
  std::vector<Label> left(bundle.begin(), bundle.begin() + cut);
  std::vector<Label> right(bundle.begin() + cut, bundle.end());
  attach_bundle(g, rng, m, left, next_internal);
  attach_bundle(g, rng, m, right, next_internal);
}

inline GenResult finish(WeightedGraph g, int n_labels) {
  std::vector<Label> labels(static_cast<std::size_t>(n_labels));
  for (int i = 0; i < n_labels; ++i) labels[i] = i + 1;
  LabeledMatrix sp = apsp(g);
  DistanceMatrix metric = DistanceMatrix::validate(sp.restrict_to(labels));
  Rational total = g.total_weight();
  auto cycle = g.unique_cycle();
  return GenResult{std::move(g), std::move(metric), std::move(total), std::move(cycle)};
}

inline GenResult generate_tree(const GenSpec& spec) {
  const int n = spec.n_labels;
  if (n < 1) throw InfeasibleSpec("tree needs at least one label");
  Rng rng(spec.seed);
  WeightedGraph g;
  if (n == 1) {
    g.add_node(1, NodeKind::leaf);
    return finish(std::move(g), n);
  }
  if (n == 2) {
    g.add_node(1, NodeKind::leaf);
    g.add_node(2, NodeKind::leaf);
    g.add_edge(1, 2, pendant_weight(rng));
    return finish(std::move(g), n);
  }
  Label next_internal = n + 1;
  Label center = next_internal++;
  g.add_node(center, NodeKind::internal);
  std::vector<Label> internals{center};
  for (Label l = 1; l <= 3; ++l) {
    g.add_node(l, NodeKind::leaf);
    g.add_edge(center, l, pendant_weight(rng));
  }
  for (Label l = 4; l <= n; ++l) {
    g.add_node(l, NodeKind::leaf);
    if (rng.coin()) {
      Label at = internals[rng.below(internals.size())];
      g.add_edge(at, l, pendant_weight(rng));
    } else {
      // Subdivide a random edge with a fresh internal node, then attach the
      // new leaf there; the fresh node ends at degree 3.
      std::vector<WeightedGraph::EdgeKey> keys;
      keys.reserve(g.edge_count());
      for (const auto& [k, w] : g.edges()) keys.push_back(k);
      auto [u, v] = keys[rng.below(keys.size())];
      g.remove_edge(u, v);
      Label m = next_internal++;
      g.add_node(m, NodeKind::internal);
      g.add_edge(u, m, pendant_weight(rng));
      g.add_edge(m, v, pendant_weight(rng));
      g.add_edge(m, l, pendant_weight(rng));
      internals.push_back(m);
    }
  }
  return finish(std::move(g), n);
}

inline std::vector<std::vector<Label>> split_bundles(Rng& rng, int n, int parts) {
  std::vector<Label> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  rng.shuffle(labels);
  // Composition of n into `parts` positive parts: choose parts-1 distinct cut
  // points from the n-1 gaps.
  std::vector<int> gaps(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) gaps[i] = i + 1;
  rng.shuffle(gaps);
  std::vector<int> cuts(gaps.begin(), gaps.begin() + (parts - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);
  std::vector<std::vector<Label>> out;
  int start = 0;
  for (int c : cuts) {
    out.emplace_back(labels.begin() + start, labels.begin() + c);
    start = c;
  }
  return out;
}

inline GenResult generate_genus1(const GenSpec& spec, bool bare_cycle) {
  const int n = spec.n_labels;
  int L = spec.cycle_len;
  Rng rng(spec.seed);
  if (bare_cycle) {
    if (L == 0) L = n;
    if (L != n) throw InfeasibleSpec("bare cycle needs cycle_len == n_labels");
  } else if (L == 0) {
    if (n < 4) throw InfeasibleSpec("genus-1 generation needs at least 4 labels");
    L = rng.in(4, std::min(8, n));
  }
  if (L < 4)
    throw InfeasibleSpec("cycle length " + std::to_string(L) +
                         " cannot satisfy the adjacency condition (minimum is 4)");
  if (n < L) throw InfeasibleSpec("need at least one label per cycle node");

  WeightedGraph g;
  std::vector<Label> cyc(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i) {
    cyc[i] = n + 1 + i;
    g.add_node(cyc[i], NodeKind::internal);
  }
  std::vector<Rational> w(static_cast<std::size_t>(L));
  if (L == 4) {
    Rational w1 = eighth(rng, 8, 16), w2 = eighth(rng, 8, 16);
    w = {w1, w2, w1, w2};
  } else {
    for (int i = 0; i < L; ++i) w[i] = eighth(rng, 8, 2 * L);
  }
  for (int i = 0; i < L; ++i) g.add_edge(cyc[i], cyc[(i + 1) % L], w[i]);

  Label next_internal = n + L + 1;
  auto bundles = split_bundles(rng, n, L);
  for (int i = 0; i < L; ++i) {
    const auto& bundle = bundles[i];
    if (bundle.size() == 1 && (bare_cycle || rng.in(1, 4) == 1)) {
      // The label sits directly on the cycle node.
      g.rename_node(cyc[i], bundle[0]);
      g.set_kind(bundle[0], NodeKind::leaf);
      continue;
    }
    attach_bundle(g, rng, cyc[i], bundle, next_internal);
  }
  return finish(std::move(g), n);
}

}  // namespace detail

inline GenResult generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::tree:
      if (spec.cycle_len != 0) throw InfeasibleSpec("trees have no cycle length");
      return detail::generate_tree(spec);
    case GenKind::genus1:
      return detail::generate_genus1(spec, false);
    case GenKind::cycle:
      return detail::generate_genus1(spec, true);
  }
  throw InfeasibleSpec("unknown generator kind");
}

}  // namespace distreal
