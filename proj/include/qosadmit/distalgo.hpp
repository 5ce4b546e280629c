#ifndef QOSADMIT_DISTALGO_HPP
#define QOSADMIT_DISTALGO_HPP

#include <optional>
#include <string>
#include <vector>

#include "qosadmit/feasibility.hpp"
#include "qosadmit/graph.hpp"
#include "qosadmit/rational.hpp"

namespace qosadmit {

enum class Verdict { kFeasible, kInfeasible };
enum class FlowDecision { kAccept, kReject };

const char* to_string(Verdict verdict);
const char* to_string(FlowDecision decision);

/// Distance-d admission control parameters. d = 0 means every node only
/// checks its own demand degree.
struct AlgoParams {
  int d = 1;

  explicit AlgoParams(int radius);
};

struct LocalEstimate {
  NodeId node = 0;
  Rational value;
  Verdict verdict = Verdict::kFeasible;

  friend bool operator==(const LocalEstimate&, const LocalEstimate&) = default;
};

struct DecisionReport {
  int d = 1;
  Rational alpha;
  Rational threshold;
  std::vector<LocalEstimate> estimates;   // indexed by node
  std::vector<FlowDecision> decisions;    // indexed by edge
  /// For each rejected flow, the lowest-id node whose infeasible verdict
  /// reached both endpoints (for d = 0, the infeasible endpoint).
  std::vector<std::optional<NodeId>> rejected_by;

  friend bool operator==(const DecisionReport&, const DecisionReport&) = default;
};

/// (2d+3)/(2d+2).
Rational alpha(int d);

/// 1 / alpha(d): the largest local estimate that still accepts.
Rational acceptance_threshold(int d);

/// Minimum schedule length of the subgraph induced by the d-ball around v.
/// For d = 0 this is the demand degree of v.
Rational local_estimate(const Graph& g, const DemandVector& tau, NodeId v, int d,
                        const Limits& limits = {});

struct GlobalBound {
  Rational value;
  NodeId node = -1;
};

/// Maximum local estimate over all nodes, lowest-id argmax.
GlobalBound global_local_bound(const Graph& g, const DemandVector& tau, int d,
                               const Limits& limits = {});

/// Verdict of node v: feasible iff its local estimate <= 1/alpha(d).
Verdict local_verdict(const Rational& estimate, int d);

/// Centralized evaluation of the distributed algorithm's decisions.
DecisionReport admission_control_reference(const Graph& g, const DemandVector& tau,
                                           const AlgoParams& params, const Limits& limits = {});

/// Text report: header with d, alpha, threshold, then one line per node and
/// one per flow, rationals rendered exactly.
std::string format_report(const DecisionReport& report, const Graph& g);

}  // namespace qosadmit

#endif  // QOSADMIT_DISTALGO_HPP
