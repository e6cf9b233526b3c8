// distreal — decide whether a distance matrix is realizable by a weighted
// tree or a single-cycle (genus-1) graph, reconstruct and certify the graph.
//
// Subcommands:
//   realize      full pipeline; prints a summary line, JSON, DOT or GraphML
//   check-cycle  certify one cyclic order (or search for one)
//   compact      one compaction/reduction step with all bookkeeping
//   tropical     min-plus polynomial evaluations for an order
//   gen          seeded random instances (tree / genus1 / cycle)
//
// Exit codes: 0 = realizable / certified, 2 = not realizable / not certified,
// 1 = usage, parse or validation errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "distreal/distreal.hpp"

namespace {

using namespace distreal;

constexpr int kExitRealizable = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

std::string read_input(const std::string& path) {
  if (path == "-" || path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

DistanceMatrix load_matrix(const std::string& path, const std::string& format) {
  std::string text = read_input(path);
  MatrixFormat f;
  if (format == "csv") f = MatrixFormat::csv;
  else if (format == "json") f = MatrixFormat::json;
  else f = sniff_matrix_format(text);
  return parse_matrix(text, f);
}

CyclicOrder parse_order_flag(const std::string& s) {
  std::vector<Label> seq;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      seq.push_back(std::stoll(tok));
    } catch (...) {
      throw DomainError("bad label '" + tok + "' in --order");
    }
  }
  return CyclicOrder::of(std::move(seq));
}

void print_violations(const ValidationError& e) {
  std::cerr << "error: input is not a distance matrix\n";
  for (const auto& v : e.violations())
    std::cerr << "  " << violation_kind_name(v.kind) << ": " << v.detail << "\n";
}

struct CommonOpts {
  std::string input = "-";
  std::string input_format = "auto";
  std::string output = "summary";
  bool trace = false;
  bool no_exhaustive = false;
  int exhaustive_max = 9;

  RealizeOptions realize_options() const {
    RealizeOptions o;
    o.exhaustive = !no_exhaustive;
    o.exhaustive_max = exhaustive_max;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_trace) {
  cmd->add_option("input", o.input, "matrix file, or - for stdin")->default_val("-");
  cmd->add_option("--input-format", o.input_format, "csv|json (default: sniff)")
      ->check(CLI::IsMember({"auto", "csv", "json"}));
  if (with_trace) cmd->add_flag("--trace", o.trace, "include the per-iteration trace");
  cmd->add_flag("--no-exhaustive", o.no_exhaustive,
                "disable the exhaustive cycle-order fallback");
  cmd->add_option("--exhaustive-max", o.exhaustive_max,
                  "largest order the exhaustive fallback will try")
      ->check(CLI::PositiveNumber);
}

int cmd_realize(const CommonOpts& o) {
  DistanceMatrix D = load_matrix(o.input, o.input_format);
  RealizationResult res = realize(D, o.realize_options());
  if (o.output == "summary") {
    std::cout << result_summary(res) << "\n";
    if (o.trace) std::cout << trace_to_text(res.analysis);
  } else if (o.output == "json") {
    std::cout << result_to_json(res, o.trace).dump(2) << "\n";
  } else if (o.output == "dot" || o.output == "graphml") {
    if (o.trace) std::cerr << trace_to_text(res.analysis);
    if (!res.graph) {
      for (const auto& d : res.diagnostics) std::cerr << "unrealizable: " << d << "\n";
      return kExitNegative;
    }
    std::cout << export_graph(*res.graph,
                              o.output == "dot" ? GraphFormat::dot : GraphFormat::graphml);
  }
  if (res.status == Status::Unrealizable) {
    for (const auto& d : res.diagnostics) std::cerr << "unrealizable: " << d << "\n";
    return kExitNegative;
  }
  return kExitRealizable;
}

int cmd_check_cycle(const CommonOpts& o, const std::string& order_flag) {
  DistanceMatrix D = load_matrix(o.input, o.input_format);
  std::optional<CyclicOrder> order;
  if (!order_flag.empty()) {
    order = parse_order_flag(order_flag);
  } else {
    order = find_cycle_order(D);
    CycleCheck pre;
    if (order) pre = verify_cycle(D, *order);
    if (!pre.ok() && !o.no_exhaustive && D.n() <= o.exhaustive_max)
      order = exhaustive_cycle_search(D, o.exhaustive_max);
    if (!order) {
      std::cout << "no realizing cyclic order found\n";
      return kExitNegative;
    }
  }
  CycleCheck check = verify_cycle(D, *order);
  if (o.output == "json") {
    nlohmann::ordered_json j;
    if (check.ok()) {
      const auto& c = *check.certificate;
      j["certified"] = true;
      j["order"] = c.order.labels();
      auto ws = nlohmann::ordered_json::array();
      for (const auto& w : c.weights) ws.push_back(w.str());
      j["weights"] = std::move(ws);
      j["total"] = c.total.str();
      j["optimal"] = c.optimal;
    } else {
      const auto& v = *check.violation;
      j["certified"] = false;
      j["violation"] = {{"i", v.i},         {"s", v.s},
                        {"partner", v.partner}, {"lhs", v.lhs.str()},
                        {"forward", v.forward.str()}, {"backward", v.backward.str()}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (check.ok()) {
      const auto& c = *check.certificate;
      std::cout << "certified order " << detail::fmt_labels(c.order.labels()) << "\n";
      std::cout << "weights " << detail::fmt_vector(c.weights) << "\n";
      std::cout << "total " << c.total.str() << "\n";
      std::cout << "optimal " << (c.optimal ? "true" : "false") << "\n";
    } else {
      const auto& v = *check.violation;
      std::cout << "violated at (i=" << v.i << ", s=" << v.s << ", pair " << v.i << "-"
                << v.partner << "): " << v.lhs.str() << " != min(" << v.forward.str()
                << ", " << v.backward.str() << ")\n";
    }
  }
  return check.ok() ? kExitRealizable : kExitNegative;
}

int cmd_compact(const CommonOpts& o) {
  DistanceMatrix D = load_matrix(o.input, o.input_format);
  CompactionVector a = compaction_vector(D);
  Label rho = static_cast<Label>(D.n());
  for (Label l : D.labels()) rho = std::max(rho, l);
  if (o.output == "json") {
    nlohmann::ordered_json j;
    j["labels"] = a.labels;
    auto av = nlohmann::ordered_json::array();
    for (const auto& v : a.a) av.push_back(v.str());
    j["a"] = std::move(av);
    LabeledMatrix M = compaction_matrix(D, a);
    j["compaction_matrix"] = nlohmann::ordered_json::parse(serialize_matrix(M, MatrixFormat::json));
    auto [reduced, step] = reduce(D, a, rho, 0);
    j["groups"] = step.groups;
    j["singletons"] = step.singletons;
    auto rl = nlohmann::ordered_json::array();
    for (const auto& [old, nw] : step.relabel) rl.push_back({old, nw});
    j["relabel"] = std::move(rl);
    j["reduction_matrix"] =
        nlohmann::ordered_json::parse(serialize_matrix(reduced, MatrixFormat::json));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "a = " << detail::fmt_vector(a.a) << "\n";
    LabeledMatrix M = compaction_matrix(D, a);
    std::cout << "compaction matrix (labels " << detail::fmt_labels(M.labels) << ")\n"
              << serialize_matrix(M, MatrixFormat::csv);
    auto [reduced, step] = reduce(D, a, rho, 0);
    std::cout << "S = " << detail::fmt_group_set(step.groups) << "\n";
    std::cout << "S' = " << detail::fmt_label_set(step.singletons) << "\n";
    std::cout << "relabel";
    for (const auto& [old, nw] : step.relabel)
      std::cout << " " << old << "->" << nw;
    std::cout << "\n";
    std::cout << "reduction matrix (labels " << detail::fmt_labels(reduced.labels())
              << ")\n"
              << serialize_matrix(reduced, MatrixFormat::csv);
  }
  return kExitRealizable;
}

int cmd_tropical(const CommonOpts& o, const std::string& order_flag) {
  DistanceMatrix D = load_matrix(o.input, o.input_format);
  std::optional<CyclicOrder> order;
  if (!order_flag.empty()) {
    order = parse_order_flag(order_flag);
  } else {
    order = find_cycle_order(D);
    if (!order && !o.no_exhaustive && D.n() <= o.exhaustive_max)
      order = exhaustive_cycle_search(D, o.exhaustive_max);
    if (!order) {
      std::cout << "no cyclic order candidate\n";
      return kExitNegative;
    }
  }
  const int n = D.n();
  CompactionVector a = compaction_vector(D);
  bool all_zero = true;
  nlohmann::ordered_json evals = nlohmann::ordered_json::array();
  for (int p = 0; p < n && n >= 4; ++p)
    for (int s = 2; s <= n - 2; ++s) {
      Label i = (*order)[p];
      TropicalEvaluation e = eval_p(D, *order, i, s);
      TropicalEvaluation ht = eval_p_tilde(D, a, *order, i, s);
      all_zero = all_zero && e.zero();
      if (o.output == "json") {
        evals.push_back({{"i", i},
                         {"s", s},
                         {"terms", {e.terms[0].str(), e.terms[1].str(), e.terms[2].str()}},
                         {"value", e.value.str()},
                         {"multiplicity", e.multiplicity},
                         {"homogenized_terms",
                          {ht.terms[0].str(), ht.terms[1].str(), ht.terms[2].str()}},
                         {"homogenized_multiplicity", ht.multiplicity}});
      } else {
        std::cout << "p(i=" << i << ", s=" << s << ") terms (" << e.terms[0].str() << ", "
                  << e.terms[1].str() << ", " << e.terms[2].str() << ") value "
                  << e.value.str() << " multiplicity " << e.multiplicity << "\n";
        std::cout << "~p(i=" << i << ", s=" << s << ") terms (" << ht.terms[0].str()
                  << ", " << ht.terms[1].str() << ", " << ht.terms[2].str()
                  << ") multiplicity " << ht.multiplicity << "\n";
      }
    }
  if (o.output == "json") {
    nlohmann::ordered_json j;
    j["order"] = order->labels();
    j["evaluations"] = std::move(evals);
    j["zero"] = all_zero;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "order " << detail::fmt_labels(order->labels()) << "\n";
    std::cout << "zero " << (all_zero ? "true" : "false") << "\n";
  }
  return all_zero ? kExitRealizable : kExitNegative;
}

int cmd_gen(const std::string& kind, int n, int cycle_len, std::uint64_t seed,
            const std::string& out, const std::string& format) {
  GenSpec spec;
  if (kind == "tree") spec.kind = GenKind::tree;
  else if (kind == "genus1") spec.kind = GenKind::genus1;
  else spec.kind = GenKind::cycle;
  spec.n_labels = n;
  spec.cycle_len = cycle_len;
  spec.seed = seed;
  GenResult res = generate(spec);
  MatrixFormat mf = format == "json" ? MatrixFormat::json : MatrixFormat::csv;
  if (out == "matrix") {
    std::cout << serialize_matrix(res.metric, mf);
  } else if (out == "graph") {
    std::cout << export_graph(res.graph, GraphFormat::json);
  } else {  // both
    nlohmann::ordered_json j;
    j["metric"] =
        nlohmann::ordered_json::parse(serialize_matrix(res.metric, MatrixFormat::json));
    j["graph"] = graph_to_json(res.graph);
    j["total_weight"] = res.total.str();
    std::cout << j.dump(2) << "\n";
  }
  return kExitRealizable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "decide tree / single-cycle realizability of a distance matrix, "
      "reconstruct and certify the graph"};
  app.require_subcommand(1);

  CommonOpts ro;
  auto* creal = app.add_subcommand("realize", "run the full pipeline");
  add_common(creal, ro, true);
  creal->add_option("--output", ro.output, "summary|json|dot|graphml")
      ->check(CLI::IsMember({"summary", "json", "dot", "graphml"}));

  CommonOpts co;
  std::string check_order;
  auto* ccheck = app.add_subcommand("check-cycle", "certify a cyclic order");
  add_common(ccheck, co, false);
  ccheck->add_option("--order", check_order, "comma-separated labels, e.g. 1,4,5,3,2,6");
  ccheck->add_option("--output", co.output, "summary|json")
      ->check(CLI::IsMember({"summary", "json"}));

  CommonOpts po;
  auto* ccomp = app.add_subcommand("compact", "one compaction/reduction step");
  add_common(ccomp, po, false);
  ccomp->add_option("--output", po.output, "summary|json")
      ->check(CLI::IsMember({"summary", "json"}));

  CommonOpts to;
  std::string trop_order;
  auto* ctrop = app.add_subcommand("tropical", "min-plus polynomial evaluations");
  add_common(ctrop, to, false);
  ctrop->add_option("--order", trop_order, "comma-separated labels");
  ctrop->add_option("--output", to.output, "summary|json")
      ->check(CLI::IsMember({"summary", "json"}));

  std::string gen_kind = "tree", gen_out = "matrix", gen_format = "csv";
  int gen_n = 0, gen_cycle_len = 0;
  std::uint64_t gen_seed = 0;
  auto* cgen = app.add_subcommand("gen", "generate a seeded random instance");
  cgen->add_option("--kind", gen_kind, "tree|genus1|cycle")
      ->required()
      ->check(CLI::IsMember({"tree", "genus1", "cycle"}));
  cgen->add_option("-n,--labels", gen_n, "number of labels")->required();
  cgen->add_option("--cycle-len", gen_cycle_len, "cycle length (genus1/cycle)");
  cgen->add_option("--seed", gen_seed, "RNG seed");
  cgen->add_option("--out", gen_out, "matrix|graph|both")
      ->check(CLI::IsMember({"matrix", "graph", "both"}));
  cgen->add_option("--format", gen_format, "matrix format csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help text or the usage error
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*creal) return cmd_realize(ro);
    if (*ccheck) return cmd_check_cycle(co, check_order);
    if (*ccomp) return cmd_compact(po);
    if (*ctrop) return cmd_tropical(to, trop_order);
    if (*cgen) return cmd_gen(gen_kind, gen_n, gen_cycle_len, gen_seed, gen_out, gen_format);
  } catch (const ValidationError& e) {
    print_violations(e);
    return kExitError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const InfeasibleSpec& e) {
    std::cerr << "error: infeasible generator request: " << e.what() << "\n";
    return kExitError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
