#include "qosadmit/distalgo.hpp"

#include <algorithm>
#include <sstream>

#include "qosadmit/errors.hpp"

namespace qosadmit {

const char* to_string(Verdict verdict) {
  return verdict == Verdict::kFeasible ? "feasible" : "infeasible";
}

const char* to_string(FlowDecision decision) {
  return decision == FlowDecision::kAccept ? "accept" : "reject";
}

AlgoParams::AlgoParams(int radius) : d(radius) {
  if (radius < 0) throw InvalidArgument("degree of centralization d must be nonnegative");
}

Rational alpha(int d) {
  if (d < 0) throw InvalidArgument("d must be nonnegative");
  return Rational(2 * d + 3, 2 * d + 2);
}

Rational acceptance_threshold(int d) { return Rational(1) / alpha(d); }

Rational local_estimate(const Graph& g, const DemandVector& tau, NodeId v, int d,
                        const Limits& limits) {
  if (d < 0) throw InvalidArgument("d must be nonnegative");
  if (d == 0) return demand_degree(g, tau, v);
  const InducedSubgraph local = induced_subgraph(g, ball(g, v, d));
  return fractional_chromatic_index(local.graph, tau.restricted(local.parent_edge), limits);
}

GlobalBound global_local_bound(const Graph& g, const DemandVector& tau, int d,
                               const Limits& limits) {
  GlobalBound best;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    Rational value = local_estimate(g, tau, v, d, limits);
    if (best.node < 0 || value > best.value) {
      best.value = std::move(value);
      best.node = v;
    }
  }
  return best;
}

Verdict local_verdict(const Rational& estimate, int d) {
  return estimate <= acceptance_threshold(d) ? Verdict::kFeasible : Verdict::kInfeasible;
}

DecisionReport admission_control_reference(const Graph& g, const DemandVector& tau,
                                           const AlgoParams& params, const Limits& limits) {
  if (tau.size() != static_cast<std::size_t>(g.edge_count())) {
    throw InvalidArgument("demand vector does not match the network's links");
  }
  const int d = params.d;
  DecisionReport report;
  report.d = d;
  report.alpha = alpha(d);
  report.threshold = acceptance_threshold(d);
  std::vector<NodeSet> balls;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    Rational value = local_estimate(g, tau, v, d, limits);
    const Verdict verdict = local_verdict(value, d);
    report.estimates.push_back(LocalEstimate{v, std::move(value), verdict});
    balls.push_back(ball(g, v, d));
  }
  auto in_ball = [&](NodeId v, NodeId w) {
    return std::binary_search(balls[v].begin(), balls[v].end(), w);
  };
  for (const Edge& e : g.edges()) {
    std::optional<NodeId> origin;
    if (d == 0) {
      if (report.estimates[e.u].verdict == Verdict::kInfeasible) {
        origin = e.u;
      } else if (report.estimates[e.v].verdict == Verdict::kInfeasible) {
        origin = e.v;
      }
    } else {
      for (NodeId v = 0; v < g.node_count() && !origin; ++v) {
        if (report.estimates[v].verdict == Verdict::kInfeasible && in_ball(v, e.u) &&
            in_ball(v, e.v)) {
          origin = v;
        }
      }
    }
    report.decisions.push_back(origin ? FlowDecision::kReject : FlowDecision::kAccept);
    report.rejected_by.push_back(origin);
  }
  return report;
}

std::string format_report(const DecisionReport& report, const Graph& g) {
  std::ostringstream out;
  out << "d " << report.d << "\n";
  out << "alpha " << report.alpha << "\n";
  out << "threshold " << report.threshold << "\n";
  for (const auto& est : report.estimates) {
    out << "node " << est.node << " estimate " << est.value << " " << to_string(est.verdict)
        << "\n";
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    out << "flow " << e.u << " " << e.v << " " << to_string(report.decisions.at(i));
    if (report.rejected_by.at(i)) out << " origin " << *report.rejected_by[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace qosadmit
