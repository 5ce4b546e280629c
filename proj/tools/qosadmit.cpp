// qosadmit: command-line front end for conflict graphs, feasibility oracles,
// distance-d admission control and the reproduction experiments.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qosadmit/distalgo.hpp"
#include "qosadmit/errors.hpp"
#include "qosadmit/experiments.hpp"
#include "qosadmit/feasibility.hpp"
#include "qosadmit/generators.hpp"
#include "qosadmit/interference.hpp"
#include "qosadmit/io.hpp"
#include "qosadmit/simnet.hpp"

namespace {

using namespace qosadmit;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

DemandVector read_edge_demands(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_edge_demands(in, g);
}

DemandVector read_vertex_demands(const std::string& path, int count) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_vertex_demands(in, count);
}

TieRule parse_ties(const std::string& text) {
  return text == "strict" ? TieRule::kStrict : TieRule::kInterfere;
}

std::string verdict_line(const std::string& name, const FeasibilityVerdict& v) {
  std::ostringstream out;
  out << name << " " << (v.accepted ? "accept" : "reject") << " bound " << v.bound_value;
  if (!v.witness.empty()) {
    out << " witness";
    for (NodeId x : v.witness) out << " " << x;
  }
  return out.str() + "\n";
}

std::string feasibility_network(const Graph& g, const DemandVector& tau,
                                const Rational& threshold) {
  std::ostringstream out;
  const ConflictGraph conflict = primary_conflict_graph(g);
  const DegreeMax degree = max_demand_degree(g, tau);
  const DensityBound odd = density(g, tau);
  const Rational exact = fractional_chromatic_index(g, tau);
  const LpResult lp = fractional_chromatic_number_lp(conflict, tau);
  const CliqueBound clique = clique_bound(conflict, tau);
  out << "model primary\n";
  out << "max_demand_degree " << degree.value << " node " << degree.node << "\n";
  out << "density " << odd.value;
  if (!odd.witness.empty()) {
    out << " witness";
    for (NodeId v : odd.witness) out << " " << v;
  }
  out << "\n";
  out << "fractional_chromatic_index " << exact << "\n";
  out << "lp_value " << lp.value << "\n";
  for (const auto& [column, weight] : lp.column_weights) {
    out << "schedule_slot " << weight << " links";
    for (NodeId v : column) out << " " << conflict.links[v].u << "-" << conflict.links[v].v;
    out << "\n";
  }
  out << "feasible " << (exact <= Rational(1) ? "yes" : "no") << "\n";
  out << "clique_bound " << clique.value << "\n";
  out << "imperfection_ratio " << imperfection_ratio(conflict) << "\n";
  out << "induced_star_number " << induced_star_number(conflict.graph).size << "\n";
  out << verdict_line("shannon", check_shannon_condition(g, tau));
  out << verdict_line("d1_condition", check_d1_condition(g, tau));
  out << verdict_line("degree_condition", check_degree_condition(conflict, tau));
  out << verdict_line("row_constraints", check_row_constraints(conflict, tau, threshold));
  return out.str();
}

std::string feasibility_conflict(const ConflictGraph& conflict, const DemandVector& tau,
                                 const Rational& threshold) {
  std::ostringstream out;
  const LpResult lp = fractional_chromatic_number_lp(conflict, tau);
  out << "model protocol\n";
  out << "lp_value " << lp.value << "\n";
  for (const auto& [column, weight] : lp.column_weights) {
    out << "schedule_slot " << weight << " vertices";
    for (NodeId v : column) out << " " << v;
    out << "\n";
  }
  out << "feasible " << (lp.value <= Rational(1) ? "yes" : "no") << "\n";
  out << "clique_bound " << clique_bound(conflict, tau).value << "\n";
  out << "induced_star_number " << induced_star_number(conflict.graph).size << "\n";
  out << verdict_line("degree_condition", check_degree_condition(conflict, tau));
  out << verdict_line("row_constraints", check_row_constraints(conflict, tau, threshold));
  return out.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream parts(text);
  for (std::string part; std::getline(parts, part, ',');) {
    if (!part.empty()) out.push_back(std::stoi(part));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed admission control for wireless ad hoc networks"};
  app.require_subcommand(1);

  // gen
  std::string gen_kind, gen_out = "-", gen_graph, gen_value, gen_p = "1/2";
  int gen_n = 5;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a graph, line network or demand file");
  gen->add_option("kind", gen_kind,
                  "cycle | path | star | random-graph | random-line-network | demand")
      ->required()
      ->check(CLI::IsMember({"cycle", "path", "star", "random-graph", "random-line-network",
                             "demand"}));
  gen->add_option("--n", gen_n, "Node count (star: leaf count)");
  gen->add_option("--p", gen_p, "Edge probability p/q for random-graph");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--graph", gen_graph, "Network graph for 'demand'");
  gen->add_option("--value", gen_value, "Uniform demand p/q for 'demand' (default: random)");
  gen->add_option("-o,--out", gen_out, "Output path ('-' for stdout)");

  // conflict
  std::string conflict_graph, conflict_line, conflict_ties = "interfere", conflict_out = "-";
  auto* conflict = app.add_subcommand("conflict", "Build and print a conflict graph");
  auto* conflict_src = conflict->add_option_group("source");
  conflict_src->add_option("--graph", conflict_graph, "Network graph (primary interference)");
  conflict_src->add_option("--line", conflict_line, "Line network (protocol interference)");
  conflict_src->require_option(1);
  conflict->add_option("--ties", conflict_ties, "Equidistant receivers: interfere | strict")
      ->check(CLI::IsMember({"interfere", "strict"}));
  conflict->add_option("-o,--out", conflict_out, "Output path");

  // feas
  std::string feas_graph, feas_line, feas_demand, feas_threshold = "1", feas_ties = "interfere",
                                                  feas_out = "-";
  auto* feas = app.add_subcommand("feas", "Exact oracle and sufficient conditions for a demand");
  auto* feas_src = feas->add_option_group("source");
  feas_src->add_option("--graph", feas_graph, "Network graph; demands per link");
  feas_src->add_option("--line", feas_line, "Line network; demands per transmission");
  feas_src->require_option(1);
  feas->add_option("--demand", feas_demand, "Demand file")->required();
  feas->add_option("--threshold", feas_threshold, "Row-constraint threshold T");
  feas->add_option("--ties", feas_ties, "Equidistant receivers: interfere | strict")
      ->check(CLI::IsMember({"interfere", "strict"}));
  feas->add_option("-o,--out", feas_out, "Output path");

  // admit
  std::string admit_graph, admit_demand, admit_mode = "reference", admit_trace, admit_out = "-";
  int admit_d = 1;
  auto* admit = app.add_subcommand("admit", "Run distance-d admission control");
  admit->add_option("--graph", admit_graph, "Network graph")->required();
  admit->add_option("--demand", admit_demand, "Demand file (per link)")->required();
  admit->add_option("--d", admit_d, "Degree of centralization")->check(CLI::NonNegativeNumber);
  admit->add_option("--mode", admit_mode, "reference | simulate")
      ->check(CLI::IsMember({"reference", "simulate"}));
  admit->add_option("--trace", admit_trace, "Write the message trace here (simulate mode)");
  admit->add_option("-o,--out", admit_out, "Output path");

  // experiment
  ExperimentSpec spec;
  std::string exp_n, exp_d, exp_format = "table", exp_out = "-";
  auto* experiment = app.add_subcommand("experiment", "Run a named reproduction experiment");
  experiment->add_option("name", spec.name)
      ->required()
      ->check(CLI::IsMember(experiment_names()));
  experiment->add_option("--seed", spec.seed, "RNG seed");
  experiment->add_option("--count", spec.count, "Instance count for sweeps");
  experiment->add_option("--n", exp_n, "Comma-separated cycle lengths");
  experiment->add_option("--d", exp_d, "Comma-separated d values");
  experiment->add_option("--format", exp_format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));
  experiment->add_option("-o,--out", exp_out, "Output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (gen_kind == "cycle") {
        emit(format_graph(cycle_graph(gen_n)), gen_out);
      } else if (gen_kind == "path") {
        emit(format_graph(path_graph(gen_n)), gen_out);
      } else if (gen_kind == "star") {
        emit(format_graph(star_graph(gen_n)), gen_out);
      } else if (gen_kind == "random-graph") {
        emit(format_graph(random_graph(gen_n, Rational::parse(gen_p), gen_seed)), gen_out);
      } else if (gen_kind == "random-line-network") {
        LineNetworkOptions options;
        options.nodes = gen_n;
        const LineNetwork net = random_line_network(options, gen_seed);
        emit("# spacing " + std::string(net.spacing_ok ? "ok" : "violated") + "\n" +
                 format_line_network(net),
             gen_out);
      } else {
        if (gen_graph.empty()) throw InvalidArgument("'gen demand' needs --graph");
        const Graph g = read_graph_file(gen_graph);
        DemandVector tau;
        if (!gen_value.empty()) {
          tau = DemandVector::uniform(g.edge_count(), Rational::parse(gen_value));
        } else {
          Rng rng(gen_seed);
          tau = random_demands(g.edge_count(), rng);
        }
        emit(format_edge_demands(g, tau), gen_out);
      }
    } else if (*conflict) {
      if (!conflict_graph.empty()) {
        emit(format_conflict_graph(primary_conflict_graph(read_graph_file(conflict_graph))),
             conflict_out);
      } else {
        const LineNetwork net = read_line_network_file(conflict_line);
        std::string text = format_conflict_graph(
            protocol_conflict_graph(net, parse_ties(conflict_ties)));
        if (!net.spacing_ok) {
          text = "# warning: spacing constraint violated at node " +
                 std::to_string(*net.spacing_violation) + "\n" + text;
        }
        emit(text, conflict_out);
      }
    } else if (*feas) {
      const Rational threshold = Rational::parse(feas_threshold);
      if (!feas_graph.empty()) {
        const Graph g = read_graph_file(feas_graph);
        emit(feasibility_network(g, read_edge_demands(feas_demand, g), threshold), feas_out);
      } else {
        const ConflictGraph cg =
            protocol_conflict_graph(read_line_network_file(feas_line), parse_ties(feas_ties));
        emit(feasibility_conflict(cg, read_vertex_demands(feas_demand, cg.graph.node_count()),
                                  threshold),
             feas_out);
      }
    } else if (*admit) {
      const Graph g = read_graph_file(admit_graph);
      const DemandVector tau = read_edge_demands(admit_demand, g);
      const AlgoParams params(admit_d);
      if (admit_mode == "reference") {
        emit("mode reference\n" + format_report(admission_control_reference(g, tau, params), g),
             admit_out);
      } else {
        const DistributedRun run = run_distributed(g, tau, params);
        emit("mode simulate\nmessages " + std::to_string(run.trace.records.size()) + "\n" +
                 format_report(run.report, g),
             admit_out);
        if (!admit_trace.empty()) emit(format_trace(run.trace), admit_trace);
      }
    } else if (*experiment) {
      spec.n_values = parse_int_list(exp_n);
      spec.d_values = parse_int_list(exp_d);
      const Report report = run_experiment(spec);
      emit(exp_format == "json" ? report.to_json() : report.to_table(), exp_out);
      return report.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
