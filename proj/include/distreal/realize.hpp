#pragma once

// The full decision procedure: iterated compaction/reduction, terminal-case
// classification, graph reconstruction and independent verification.
//
// analyze() runs the forward loop. Each iteration computes the compaction
// vector of the current matrix and stops on one of the terminal cases:
//   - order 2           -> a single edge
//   - null vector       -> the matrix must be realized by one cycle
//   - zero compaction   -> a star (all labels pendant on one fresh hub)
// otherwise it reduces (drops duplicate rows, issues fresh labels) and loops.
// A star terminal is recorded as one synthetic reduction step whose single
// group holds every remaining label, so reconstruction needs no special case.
//
// reconstruct() replays the steps backward over the terminal graph: each
// singleton j either hangs as a pendant of weight a_j on its fresh label or,
// when a_j = 0, takes the fresh label's place; each group hangs all its
// members as pendants on the group's fresh internal node. Zero-weight pendant
// edges are contracted afterwards, which is how original labels end up ON the
// cycle or at internal positions.
//
// realize() glues everything together and re-derives the input matrix from
// the result via shortest paths — a non-Unrealizable answer is only returned
// if that independent check passes exactly.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "distreal/compaction.hpp"
#include "distreal/cycle.hpp"
#include "distreal/errors.hpp"
#include "distreal/graph.hpp"
#include "distreal/matrix.hpp"

namespace distreal {

struct Order2Terminal {
  Label u = 0, v = 0;
  Rational delta;
};
struct StarTerminal {};  // details live in the final (synthetic) step
struct CycleTerminal {
  DistanceMatrix matrix;
};
struct StuckTerminal {
  std::string diagnostic;
};

struct Analysis {
  std::vector<Label> original_labels;
  std::vector<ReductionStep> steps;
  std::variant<Order2Terminal, StarTerminal, CycleTerminal, StuckTerminal> terminal{
      StarTerminal{}};
  Label rho_final = 0;  // label counter after the last real relabeling

  bool stuck() const { return std::holds_alternative<StuckTerminal>(terminal); }
};

inline Analysis analyze(const DistanceMatrix& D) {
  Analysis out;
  out.original_labels = D.labels();
  Label rho = static_cast<Label>(D.n());
  for (Label l : D.labels()) rho = std::max(rho, l);

  DistanceMatrix cur = D;
  const int max_iter = D.n() + 2;  // theta = 0 forces a null vector next round
  for (int t = 0;; ++t) {
    if (t > max_iter) throw InternalError("reduction loop failed to terminate");
    const int n = cur.n();
    if (n == 2) {
      out.terminal = Order2Terminal{cur.labels()[0], cur.labels()[1], cur.at(0, 1)};
      out.rho_final = rho;
      return out;
    }
    CompactionVector a;
    if (n == 1) {
      a.labels = cur.labels();
      a.a.assign(1, Rational(0));
    } else {
      a = compaction_vector(cur);
    }
    if (n >= 3 && a.is_null()) {
      out.terminal = CycleTerminal{cur};
      out.rho_final = rho;
      return out;
    }
    LabeledMatrix m;
    if (n == 1) {
      m = LabeledMatrix::zeros(cur.labels());
    } else {
      try {
        m = compaction_matrix(cur, a);
      } catch (const CompactionError& e) {
        out.terminal = StuckTerminal{std::string("compaction invalid: ") + e.what()};
        out.rho_final = rho;
        return out;
      }
    }
    bool all_zero = true;
    for (const auto& v : m.e)
      if (!v.is_zero()) {
        all_zero = false;
        break;
      }
    if (all_zero) {
      // Star: one synthetic step whose single group is every label; the hub
      // takes the first fresh label (rho_final + 1) and is not counted into
      // the label budget.
      ReductionStep star;
      star.t = t;
      star.rho = rho;
      star.a = a;
      star.groups.push_back(cur.labels());
      star.relabel.emplace_back(cur.labels()[0], rho + 1);
      out.steps.push_back(std::move(star));
      out.terminal = StarTerminal{};
      out.rho_final = rho;
      return out;
    }
    auto [next, step] = reduce(cur, a, rho, t);
    rho = step.rho_after();
    out.steps.push_back(std::move(step));
    cur = std::move(next);
  }
}

struct RealizeOptions {
  bool exhaustive = true;   // fall back to exhaustive cycle search
  int exhaustive_max = 9;   // largest terminal order the fallback will try
};

struct TerminalGraph {
  WeightedGraph graph;
  std::optional<CycleCertificate> certificate;  // present for cycle terminals
};

// Build the terminal case's graph. nullopt when a cycle terminal admits no
// single-cycle realization (the whole matrix is then unrealizable).
inline std::optional<TerminalGraph> terminal_graph(const Analysis& an,
                                                   const RealizeOptions& opt = {}) {
  if (an.stuck()) return std::nullopt;
  TerminalGraph out;
  if (const auto* o2 = std::get_if<Order2Terminal>(&an.terminal)) {
    out.graph.add_node(o2->u);
    out.graph.add_node(o2->v);
    out.graph.add_edge(o2->u, o2->v, o2->delta);
    return out;
  }
  if (std::holds_alternative<StarTerminal>(an.terminal)) {
    out.graph.add_node(an.rho_final + 1);
    return out;
  }
  const auto& M = std::get<CycleTerminal>(an.terminal).matrix;
  std::optional<CyclicOrder> order = find_cycle_order(M);
  CycleCheck check;
  if (order) check = verify_cycle(M, *order);
  if (!check.ok() && opt.exhaustive && M.n() <= opt.exhaustive_max) {
    order = exhaustive_cycle_search(M, opt.exhaustive_max);
    if (order) check = verify_cycle(M, *order);
  }
  if (!check.ok()) return std::nullopt;
  const CycleCertificate& cert = *check.certificate;
  for (Label l : cert.order.labels()) out.graph.add_node(l);
  const int n = cert.order.size();
  for (int k = 0; k < n; ++k)
    out.graph.add_edge(cert.order[k], cert.order.at_mod(k + 1), cert.weights[k]);
  out.certificate = cert;
  return out;
}

// Replay the recorded steps backward over the terminal graph.
inline WeightedGraph reconstruct(const Analysis& an, WeightedGraph g) {
  for (auto it = an.steps.rbegin(); it != an.steps.rend(); ++it) {
    const ReductionStep& step = *it;
    // Singletons: pendant of weight a_j on the fresh label, or take its place.
    for (int k = 0; k < step.sigma(); ++k) {
      Label j = step.singletons[k];
      Label fresh = step.rho + step.theta() + 1 + k;
      const Rational& aj = step.a.at(j);
      if (aj.is_zero()) {
        g.rename_node(fresh, j);
      } else {
        g.add_node(j);
        g.add_edge(fresh, j, aj);
      }
    }
    // Groups: every member (representative included) hangs on the group node.
    for (int k = 0; k < step.theta(); ++k) {
      Label fresh = step.rho + 1 + k;
      for (Label member : step.groups[k]) {
        g.add_node(member);
        g.add_edge(fresh, member, step.a.at(member));
      }
    }
    // A zero bound means a label sits exactly at its attachment node.  Contract
    // now, while the label is still a pendant: the steps replayed next may hang
    // further edges on it, after which the contraction would be ambiguous.
    g.contract_zero_pendants();
  }
  return g;
}

enum class Status { Tree, Genus1, Unrealizable };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Tree: return "tree";
    case Status::Genus1: return "genus1";
    case Status::Unrealizable: return "unrealizable";
  }
  return "unknown";
}

struct RealizationResult {
  Status status = Status::Unrealizable;
  std::optional<WeightedGraph> graph;
  std::optional<CycleCertificate> certificate;  // terminal-cycle certificate
  std::optional<std::vector<Label>> cycle;      // cycle node ids in the final graph
  Rational total;                                // 0 when unrealizable
  bool verified = false;                         // shortest paths reproduce the input
  std::vector<std::string> diagnostics;
  Analysis analysis;
};

inline RealizationResult realize(const DistanceMatrix& D, const RealizeOptions& opt = {}) {
  RealizationResult res;
  res.analysis = analyze(D);

  if (res.analysis.stuck()) {
    res.diagnostics.push_back(std::get<StuckTerminal>(res.analysis.terminal).diagnostic);
    res.diagnostics.push_back("matrix is not realizable by this method's criteria");
    return res;
  }
  auto tg = terminal_graph(res.analysis, opt);
  if (!tg) {
    const auto& M = std::get<CycleTerminal>(res.analysis.terminal).matrix;
    std::string note = "terminal matrix of order " + std::to_string(M.n()) +
                       " admits no single-cycle realization";
    if (!opt.exhaustive && M.n() > 3)
      note += " (greedy heuristic only; exhaustive fallback disabled)";
    else if (M.n() > opt.exhaustive_max)
      note += " (greedy heuristic only; order exceeds the exhaustive cap of " +
              std::to_string(opt.exhaustive_max) + ")";
    res.diagnostics.push_back(std::move(note));
    return res;
  }

  WeightedGraph g = reconstruct(res.analysis, std::move(tg->graph));
  g.contract_zero_pendants();
  {
    std::set<Label> originals(res.analysis.original_labels.begin(),
                              res.analysis.original_labels.end());
    for (const auto& [id, kind] : g.nodes())
      g.set_kind(id, originals.count(id) ? NodeKind::leaf : NodeKind::internal);
  }

  // Independent check: shortest paths over the result must reproduce the
  // input matrix exactly.
  LabeledMatrix sp = apsp(g);
  LabeledMatrix back = sp.restrict_to(res.analysis.original_labels);
  if (!(back == D.data()))
    throw InternalError("reconstructed graph does not reproduce the input metric");
  res.verified = true;

  const int cyc = g.cyclomatic();
  if (cyc == 0) {
    res.status = Status::Tree;
  } else if (cyc == 1) {
    res.status = Status::Genus1;
    res.cycle = g.unique_cycle();
  } else {
    throw InternalError("reconstruction produced cyclomatic number " + std::to_string(cyc));
  }
  if (tg->certificate && cyc != 1)
    throw InternalError("cycle terminal collapsed to a non-unicyclic graph");
  res.certificate = std::move(tg->certificate);
  res.total = g.total_weight();
  res.graph = std::move(g);
  return res;
}

}  // namespace distreal
