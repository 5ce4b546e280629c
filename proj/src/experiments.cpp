#include "qosadmit/experiments.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qosadmit/distalgo.hpp"
#include "qosadmit/errors.hpp"
#include "qosadmit/feasibility.hpp"
#include "qosadmit/generators.hpp"
#include "qosadmit/interference.hpp"

namespace qosadmit {

namespace {

Check compare(std::string instance, std::string quantity, const Rational& computed,
              const Rational& expected, Provenance provenance) {
  return Check{std::move(instance), std::move(quantity), computed.str(), expected.str(),
               provenance, computed == expected};
}

Check at_most(std::string instance, std::string quantity, const Rational& computed,
              const Rational& bound, Provenance provenance) {
  return Check{std::move(instance), std::move(quantity), computed.str(), "<= " + bound.str(),
               provenance, computed <= bound};
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i > 0 ? "," : "") + std::to_string(values[i]);
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 step so neighbouring indices give unrelated streams
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Limits wide_limits() {
  Limits limits;
  limits.max_enumeration_nodes = 32;
  return limits;
}

Report odd_cycle_schedule(const ExperimentSpec& spec) {
  const auto ns = spec.n_values.empty() ? std::vector<int>{5, 7, 9} : spec.n_values;
  Report report;
  report.parameters.emplace_back("n", join(ns));
  for (int n : ns) {
    const Graph cycle = cycle_graph(n);
    const auto tau = DemandVector::uniform(cycle.edge_count(), Rational(1));
    const std::string name = "C_" + std::to_string(n) + " tau=1";
    const Rational expected(2 * n, n - 1);
    report.checks.push_back(compare(name, "fractional chromatic index",
                                    fractional_chromatic_index(cycle, tau), expected,
                                    Provenance::kPaper));
    const auto lp = fractional_chromatic_number_lp(primary_conflict_graph(cycle), tau);
    report.checks.push_back(
        compare(name, "LP fractional chromatic number", lp.value, expected, Provenance::kDerived));
  }
  return report;
}

Report bound_tightness(const ExperimentSpec& spec) {
  const auto ds = spec.d_values.empty() ? std::vector<int>{1, 2, 3} : spec.d_values;
  Report report;
  report.parameters.emplace_back("d", join(ds));
  for (int d : ds) {
    const int n = 2 * d + 3;
    const Graph cycle = cycle_graph(n);
    const auto half = DemandVector::uniform(cycle.edge_count(), Rational(1, 2));
    const std::string name = "C_" + std::to_string(n) + " tau=1/2 d=" + std::to_string(d);
    const Rational local = global_local_bound(cycle, half, d).value;
    const Rational exact = fractional_chromatic_index(cycle, half);
    report.checks.push_back(
        compare(name, "global local bound", local, Rational(1), Provenance::kPaper));
    report.checks.push_back(compare(name, "fractional chromatic index", exact,
                                    Rational(2 * d + 3, 2 * d + 2), Provenance::kPaper));
    report.checks.push_back(
        compare(name, "exact / local ratio", exact / local, alpha(d), Provenance::kPaper));

    std::vector<Rational> values(cycle.edge_count(), Rational(1, 2));
    values.back() = Rational(0);
    const DemandVector dropped(values);
    const std::string dropped_name =
        "C_" + std::to_string(n) + " tau=(1/2,...,1/2,0) d=" + std::to_string(d);
    report.checks.push_back(compare(dropped_name, "global local bound",
                                    global_local_bound(cycle, dropped, d).value, Rational(1),
                                    Provenance::kPaper));
    report.checks.push_back(compare(dropped_name, "fractional chromatic index",
                                    fractional_chromatic_index(cycle, dropped), Rational(1),
                                    Provenance::kPaper));
  }
  return report;
}

Report sigma_line_sweep(const ExperimentSpec& spec) {
  const int count = spec.count > 0 ? spec.count : 300;
  Report report;
  report.parameters.emplace_back("count", std::to_string(count));
  report.parameters.emplace_back("nodes", "4..12");

  const LineNetwork claw = claw_line_network();
  const ConflictGraph claw_conflict = protocol_conflict_graph(claw);
  const InducedStar claw_star = induced_star_number(claw_conflict.graph);
  report.checks.push_back(compare("claw network", "induced star number", Rational(claw_star.size),
                                  Rational(3), Provenance::kPaper));
  const bool centered = claw_star.center == 0 && claw_star.leaves == NodeSet{1, 2, 3};
  report.checks.push_back(Check{"claw network", "claw center / leaves",
                                centered ? "v1 / v2,v3,v4" : "other", "v1 / v2,v3,v4",
                                Provenance::kPaper, centered});

  const Limits limits = wide_limits();
  std::map<int, int> histogram;
  int worst = 0;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = derive_seed(spec.seed, i);
    Rng rng(seed);
    LineNetworkOptions options;
    options.nodes = static_cast<int>(rng.uniform(4, 12));
    const LineNetwork net = random_line_network(options, seed);
    const InducedStar star = induced_star_number(protocol_conflict_graph(net).graph, limits);
    ++histogram[star.size];
    worst = std::max(worst, star.size);
    report.checks.push_back(at_most("line network #" + std::to_string(i) + " n=" +
                                        std::to_string(options.nodes) + " tx=" +
                                        std::to_string(net.transmissions.size()),
                                    "induced star number", Rational(star.size), Rational(3),
                                    Provenance::kPaper));
  }
  report.summary.emplace_back("max induced star number", std::to_string(worst));
  for (const auto& [sigma, times] : histogram) {
    report.summary.emplace_back("instances with sigma=" + std::to_string(sigma),
                                std::to_string(times));
  }
  return report;
}

// Conflict graph for the row experiment: alternately a line graph of a
// small random network and a protocol conflict graph of a line network.
ConflictGraph random_conflict_instance(std::uint64_t seed, int index) {
  Rng rng(seed);
  if (index % 2 == 0) {
    const int n = static_cast<int>(rng.uniform(3, 6));
    return primary_conflict_graph(random_graph(n, Rational(rng.uniform(1, 3), 4), seed));
  }
  LineNetworkOptions options;
  options.nodes = static_cast<int>(rng.uniform(4, 9));
  return protocol_conflict_graph(random_line_network(options, seed));
}

Report row_worst_case(const ExperimentSpec& spec) {
  const int count = spec.count > 0 ? spec.count : 200;
  Report report;
  report.parameters.emplace_back("count", std::to_string(count));

  const Graph claw = star_graph(3);
  const DemandVector claw_tau({Rational(0), Rational(1), Rational(1), Rational(1)});
  const Rational row = check_row_constraints(claw, claw_tau, Rational(1)).bound_value;
  const Rational exact = fractional_chromatic_number_lp(claw, claw_tau).value;
  const std::string claw_name = "K_{1,3} conflict, tau=(0,1,1,1)";
  report.checks.push_back(compare(claw_name, "row estimate", row, Rational(3), Provenance::kDerived));
  report.checks.push_back(compare(claw_name, "exact value", exact, Rational(1), Provenance::kDerived));
  report.checks.push_back(compare(claw_name, "row / exact", row / exact,
                                  Rational(induced_star_number(claw).size), Provenance::kPaper));

  const Limits limits = wide_limits();
  Rational worst_gap;
  int produced = 0;
  for (std::uint64_t attempt = 0; produced < count; ++attempt) {
    const std::uint64_t seed = derive_seed(spec.seed, attempt);
    const ConflictGraph conflict = random_conflict_instance(seed, static_cast<int>(attempt));
    if (conflict.graph.edge_count() == 0) continue;
    Rng rng(seed ^ 0x5bd1e995ULL);
    const DemandVector raw = random_demands(conflict.graph.node_count(), rng);
    const Rational raw_value = fractional_chromatic_number_lp(conflict, raw, limits).value;
    if (raw_value.sign() == 0) continue;
    // scale into the feasible set: exact value becomes a random level in (0, 1]
    const Rational level(rng.uniform(1, 10), 10);
    const DemandVector tau = raw.scaled(level / raw_value);
    const Rational value = fractional_chromatic_number_lp(conflict, tau, limits).value;
    const Rational row_sum = check_row_constraints(conflict, tau, Rational(1)).bound_value;
    const int sigma = induced_star_number(conflict.graph, limits).size;
    const Rational ratio = row_sum / value;
    worst_gap = std::max(worst_gap, ratio - Rational(sigma));
    report.checks.push_back(at_most("instance #" + std::to_string(produced) + " (" +
                                        (attempt % 2 == 0 ? "primary" : "protocol") +
                                        ", sigma=" + std::to_string(sigma) + ")",
                                    "row / exact", ratio, Rational(sigma), Provenance::kPaper));
    ++produced;
  }
  report.summary.emplace_back("max (row/exact - sigma)", worst_gap.str());
  return report;
}

Report oracle_crosscheck(const ExperimentSpec& spec) {
  const int count = spec.count > 0 ? spec.count : 200;
  Report report;
  report.parameters.emplace_back("count", std::to_string(count));
  report.parameters.emplace_back("nodes", "2..7");
  const Limits limits = wide_limits();
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = derive_seed(spec.seed, i);
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform(2, 7));
    const Graph g = random_graph(n, Rational(rng.uniform(1, 4), 5), seed);
    const DemandVector tau = random_demands(g.edge_count(), rng);
    const Rational edmonds = fractional_chromatic_index(g, tau, limits);
    const Rational lp = fractional_chromatic_number_lp(primary_conflict_graph(g), tau, limits).value;
    report.checks.push_back(compare("random #" + std::to_string(i) + " n=" + std::to_string(n) +
                                        " m=" + std::to_string(g.edge_count()),
                                    "max(Delta, Lambda) vs LP", edmonds, lp, Provenance::kDerived));
  }
  return report;
}

}  // namespace

const char* to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kPaper:
      return "paper";
    case Provenance::kTrivial:
      return "trivial";
    case Provenance::kDerived:
      return "derived";
  }
  return "unknown";
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"odd-cycle-schedule", "bound-tightness",
                                              "sigma-line-sweep", "row-worst-case",
                                              "oracle-crosscheck"};
  return names;
}

void validate(const ExperimentSpec& spec) {
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), spec.name) == names.end()) {
    throw InvalidArgument("unknown experiment '" + spec.name + "'");
  }
  if (spec.count < 0) throw InvalidArgument("count must be positive");
  for (int n : spec.n_values) {
    if (n < 3 || n % 2 == 0 || n > 15) {
      throw InvalidArgument("odd cycle length must be odd and in [3, 15]");
    }
  }
  for (int d : spec.d_values) {
    if (d < 1 || d > 6) throw InvalidArgument("d must be in [1, 6]");
  }
}

Report run_experiment(const ExperimentSpec& spec) {
  validate(spec);
  Report report;
  if (spec.name == "odd-cycle-schedule") {
    report = odd_cycle_schedule(spec);
  } else if (spec.name == "bound-tightness") {
    report = bound_tightness(spec);
  } else if (spec.name == "sigma-line-sweep") {
    report = sigma_line_sweep(spec);
  } else if (spec.name == "row-worst-case") {
    report = row_worst_case(spec);
  } else {
    report = oracle_crosscheck(spec);
  }
  report.experiment = spec.name;
  report.seed = spec.seed;
  return report;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["experiment"] = experiment;
  doc["seed"] = seed;
  auto& params = doc["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : parameters) params[key] = value;
  auto& rows = doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    rows.push_back({{"instance", c.instance},
                    {"quantity", c.quantity},
                    {"computed", c.computed},
                    {"expected", c.expected},
                    {"provenance", to_string(c.provenance)},
                    {"pass", c.pass}});
  }
  auto& sum = doc["summary"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : summary) sum[key] = value;
  sum["checks"] = checks.size();
  sum["failed"] = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
  doc["pass"] = all_pass();
  return doc.dump(2) + "\n";
}

std::string Report::to_table() const {
  std::size_t w_instance = 8, w_quantity = 8, w_computed = 8, w_expected = 8;
  for (const auto& c : checks) {
    w_instance = std::max(w_instance, c.instance.size());
    w_quantity = std::max(w_quantity, c.quantity.size());
    w_computed = std::max(w_computed, c.computed.size());
    w_expected = std::max(w_expected, c.expected.size());
  }
  std::ostringstream out;
  out << "experiment " << experiment << " (seed " << seed << ")\n";
  for (const auto& [key, value] : parameters) out << "  " << key << " = " << value << "\n";
  out << std::left << std::setw(w_instance + 2) << "instance" << std::setw(w_quantity + 2)
      << "quantity" << std::setw(w_computed + 2) << "computed" << std::setw(w_expected + 2)
      << "expected" << std::setw(9) << "source"
      << "result\n";
  for (const auto& c : checks) {
    out << std::setw(w_instance + 2) << c.instance << std::setw(w_quantity + 2) << c.quantity
        << std::setw(w_computed + 2) << c.computed << std::setw(w_expected + 2) << c.expected
        << std::setw(9) << to_string(c.provenance) << (c.pass ? "PASS" : "FAIL") << "\n";
  }
  for (const auto& [key, value] : summary) out << key << ": " << value << "\n";
  out << (all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace qosadmit
