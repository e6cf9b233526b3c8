#pragma once

// Rendering of the analysis trace and realization results. trace_version 1.
// The text trace prints, per iteration: the compaction vector, the groups of
// collapsed rows, the singletons, the counters and the relabeling; then the
// terminal case. Both renderings are deterministic.

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "distreal/compaction.hpp"
#include "distreal/graph_io.hpp"
#include "distreal/realize.hpp"

namespace distreal {

inline constexpr int kTraceVersion = 1;

namespace detail {

inline std::string fmt_labels(const std::vector<Label>& ls) {
  std::string s = "(";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(ls[i]);
  }
  return s + ")";
}

inline std::string fmt_vector(const std::vector<Rational>& vs) {
  std::string s = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ", ";
    s += vs[i].str();
  }
  return s + ")";
}

inline std::string fmt_group_set(const std::vector<std::vector<Label>>& groups) {
  std::string s = "{";
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (g) s += ",";
    s += "{";
    for (std::size_t i = 0; i < groups[g].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(groups[g][i]);
    }
    s += "}";
  }
  return s + "}";
}

inline std::string fmt_label_set(const std::vector<Label>& ls) {
  std::string s = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ls[i]);
  }
  return s + "}";
}

}  // namespace detail

inline std::string trace_to_text(const Analysis& an) {
  std::string out = "trace_version " + std::to_string(kTraceVersion) + "\n";
  for (const ReductionStep& st : an.steps) {
    out += "iteration " + std::to_string(st.t) + "\n";
    out += "  labels " + detail::fmt_labels(st.a.labels) + "\n";
    out += "  a = " + detail::fmt_vector(st.a.a) + "\n";
    out += "  S = " + detail::fmt_group_set(st.groups) + "\n";
    out += "  S' = " + detail::fmt_label_set(st.singletons) + "\n";
    out += "  theta = " + std::to_string(st.theta()) + "  sigma = " +
           std::to_string(st.sigma()) + "  rho = " + std::to_string(st.rho) + "\n";
    if (!st.relabel.empty()) {
      out += "  relabel";
      for (const auto& [o, nw] : st.relabel)
        out += " " + std::to_string(o) + "->" + std::to_string(nw);
      out += "\n";
    }
  }
  if (const auto* o2 = std::get_if<Order2Terminal>(&an.terminal)) {
    out += "terminal order-2 edge (" + std::to_string(o2->u) + ", " + std::to_string(o2->v) +
           ") weight " + o2->delta.str() + "\n";
  } else if (std::holds_alternative<StarTerminal>(an.terminal)) {
    out += "terminal star, hub " + std::to_string(an.rho_final + 1) + "\n";
  } else if (const auto* cy = std::get_if<CycleTerminal>(&an.terminal)) {
    out += "terminal cycle on labels " + detail::fmt_labels(cy->matrix.labels()) + "\n";
  } else if (const auto* stk = std::get_if<StuckTerminal>(&an.terminal)) {
    out += "terminal stuck: " + stk->diagnostic + "\n";
  }
  return out;
}

inline nlohmann::ordered_json trace_to_json(const Analysis& an) {
  nlohmann::ordered_json j;
  j["trace_version"] = kTraceVersion;
  auto iters = nlohmann::ordered_json::array();
  for (const ReductionStep& st : an.steps) {
    nlohmann::ordered_json it;
    it["t"] = st.t;
    it["labels"] = st.a.labels;
    auto av = nlohmann::ordered_json::array();
    for (const auto& v : st.a.a) av.push_back(v.str());
    it["a"] = std::move(av);
    it["groups"] = st.groups;
    it["singletons"] = st.singletons;
    it["theta"] = st.theta();
    it["sigma"] = st.sigma();
    it["rho"] = st.rho;
    auto rl = nlohmann::ordered_json::array();
    for (const auto& [o, nw] : st.relabel) rl.push_back({o, nw});
    it["relabel"] = std::move(rl);
    iters.push_back(std::move(it));
  }
  j["iterations"] = std::move(iters);
  nlohmann::ordered_json term;
  if (const auto* o2 = std::get_if<Order2Terminal>(&an.terminal)) {
    term["kind"] = "order2";
    term["labels"] = std::vector<Label>{o2->u, o2->v};
    term["weight"] = o2->delta.str();
  } else if (std::holds_alternative<StarTerminal>(an.terminal)) {
    term["kind"] = "star";
    term["hub"] = an.rho_final + 1;
  } else if (const auto* cy = std::get_if<CycleTerminal>(&an.terminal)) {
    term["kind"] = "cycle";
    term["labels"] = cy->matrix.labels();
  } else if (const auto* stk = std::get_if<StuckTerminal>(&an.terminal)) {
    term["kind"] = "stuck";
    term["diagnostic"] = stk->diagnostic;
  }
  j["terminal"] = std::move(term);
  return j;
}

// One-line human summary, e.g.
//   status=genus1 total_weight=12 cycle=[6,11,9,13]
inline std::string result_summary(const RealizationResult& r) {
  std::string s = "status=" + std::string(status_name(r.status));
  if (r.status == Status::Unrealizable) return s;
  s += " total_weight=" + r.total.str();
  if (r.cycle) {
    s += " cycle=[";
    for (std::size_t i = 0; i < r.cycle->size(); ++i) {
      if (i) s += ",";
      s += std::to_string((*r.cycle)[i]);
    }
    s += "]";
  }
  return s;
}

inline nlohmann::ordered_json result_to_json(const RealizationResult& r, bool with_trace) {
  nlohmann::ordered_json j;
  if (r.status == Status::Unrealizable) {
    j["status"] = "unrealizable";
    j["diagnostics"] = r.diagnostics;
  } else {
    j = graph_to_json(*r.graph);  // carries status/nodes/edges/cycle/total_weight
  }
  if (with_trace) j["trace"] = trace_to_json(r.analysis);
  return j;
}

}  // namespace distreal
