#ifndef QOSADMIT_SIMNET_HPP
#define QOSADMIT_SIMNET_HPP

#include <string>
#include <vector>

#include "qosadmit/distalgo.hpp"
#include "qosadmit/graph.hpp"

namespace qosadmit {

/// Verdict broadcast by `origin`; `counter` is the remaining hop budget as
/// carried on the wire (initially d).
struct Message {
  NodeId origin = 0;
  Verdict verdict = Verdict::kFeasible;
  int counter = 0;

  friend bool operator==(const Message&, const Message&) = default;
};

struct TraceRecord {
  int round = 0;
  NodeId sender = 0;
  NodeId receiver = 0;
  Message message;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct InboxEntry {
  NodeId origin = 0;
  Verdict verdict = Verdict::kFeasible;

  friend bool operator==(const InboxEntry&, const InboxEntry&) = default;
};

struct SimTrace {
  /// Every transmission, in (round, sender, receiver, origin) order.
  std::vector<TraceRecord> records;
  /// Per node, the distinct origins it has heard from (itself included),
  /// sorted by origin.
  std::vector<std::vector<InboxEntry>> inbox;

  friend bool operator==(const SimTrace&, const SimTrace&) = default;
};

struct FloodResult {
  NodeSet delivered;
  SimTrace trace;
};

struct DistributedRun {
  DecisionReport report;
  SimTrace trace;
};

/// Round-synchronous flooding engine. All origins flood concurrently; a
/// message sent in round r is delivered in round r+1. A receiver decrements
/// the counter and forwards on all other links while it stays positive.
/// Each node forwards a given origin's message at most once.
class FloodNetwork {
 public:
  explicit FloodNetwork(const Graph& g);

  /// Runs until quiescent. `verdicts[v]` is the payload of origin v; origins
  /// not listed in `origins` stay silent.
  SimTrace run(const std::vector<NodeId>& origins, const std::vector<Verdict>& verdicts,
               int d) const;

 private:
  const Graph& graph_;
};

FloodResult run_flood(const Graph& g, NodeId origin, Verdict payload, int d);

/// Every node computes its local estimate, floods its verdict d hops, and
/// each link decides from its endpoints' inboxes.
DistributedRun run_distributed(const Graph& g, const DemandVector& tau, const AlgoParams& params,
                               const Limits& limits = {});

/// One `round sender receiver origin verdict counter` line per record.
std::string format_trace(const SimTrace& trace);

}  // namespace qosadmit

#endif  // QOSADMIT_SIMNET_HPP
