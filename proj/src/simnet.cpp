#include "qosadmit/simnet.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "qosadmit/errors.hpp"

namespace qosadmit {

namespace {

struct InFlight {
  NodeId sender;
  NodeId receiver;
  Message message;

  auto key() const { return std::tie(sender, receiver, message.origin); }
};

const Verdict* find_verdict(const std::vector<InboxEntry>& inbox, NodeId origin) {
  const auto it = std::lower_bound(
      inbox.begin(), inbox.end(), origin,
      [](const InboxEntry& entry, NodeId value) { return entry.origin < value; });
  if (it == inbox.end() || it->origin != origin) return nullptr;
  return &it->verdict;
}

}  // namespace

FloodNetwork::FloodNetwork(const Graph& g) : graph_(g) {}

SimTrace FloodNetwork::run(const std::vector<NodeId>& origins,
                           const std::vector<Verdict>& verdicts, int d) const {
  if (d < 0) throw InvalidArgument("flooding radius must be nonnegative");
  const int n = graph_.node_count();
  if (verdicts.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("one verdict per node is required");
  }
  SimTrace trace;
  trace.inbox.resize(n);
  std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));

  std::vector<InFlight> outgoing;
  auto send_all = [&](NodeId from, NodeId except, const Message& message) {
    for (NodeId w : graph_.neighbors(from)) {
      if (w != except) outgoing.push_back(InFlight{from, w, message});
    }
  };

  for (NodeId v : origins) {
    if (v < 0 || v >= n) throw InvalidArgument("origin out of range");
    if (seen[v][v]) continue;
    seen[v][v] = 1;
    trace.inbox[v].push_back(InboxEntry{v, verdicts[v]});
    if (d > 0) send_all(v, -1, Message{v, verdicts[v], d});
  }

  for (int round = 0; !outgoing.empty(); ++round) {
    std::sort(outgoing.begin(), outgoing.end(),
              [](const InFlight& a, const InFlight& b) { return a.key() < b.key(); });
    for (const auto& f : outgoing) {
      trace.records.push_back(TraceRecord{round, f.sender, f.receiver, f.message});
    }
    std::vector<InFlight> delivered;
    delivered.swap(outgoing);
    for (const auto& f : delivered) {
      const NodeId at = f.receiver;
      const NodeId origin = f.message.origin;
      if (seen[at][origin]) continue;
      seen[at][origin] = 1;
      trace.inbox[at].push_back(InboxEntry{origin, f.message.verdict});
      const int remaining = f.message.counter - 1;
      if (remaining > 0) send_all(at, f.sender, Message{origin, f.message.verdict, remaining});
    }
  }
  for (auto& inbox : trace.inbox) {
    std::sort(inbox.begin(), inbox.end(),
              [](const InboxEntry& a, const InboxEntry& b) { return a.origin < b.origin; });
  }
  return trace;
}

FloodResult run_flood(const Graph& g, NodeId origin, Verdict payload, int d) {
  std::vector<Verdict> verdicts(g.node_count(), Verdict::kFeasible);
  if (origin < 0 || origin >= g.node_count()) throw InvalidArgument("origin out of range");
  verdicts[origin] = payload;
  FloodResult result;
  result.trace = FloodNetwork(g).run({origin}, verdicts, d);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (find_verdict(result.trace.inbox[v], origin) != nullptr) result.delivered.push_back(v);
  }
  return result;
}

DistributedRun run_distributed(const Graph& g, const DemandVector& tau, const AlgoParams& params,
                               const Limits& limits) {
  if (tau.size() != static_cast<std::size_t>(g.edge_count())) {
    throw InvalidArgument("demand vector does not match the network's links");
  }
  const int d = params.d;
  DistributedRun run;
  DecisionReport& report = run.report;
  report.d = d;
  report.alpha = alpha(d);
  report.threshold = acceptance_threshold(d);

  // Local computation at every node; only the d-ball is consulted.
  std::vector<Verdict> verdicts;
  std::vector<NodeId> origins;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    Rational value = local_estimate(g, tau, v, d, limits);
    const Verdict verdict = local_verdict(value, d);
    report.estimates.push_back(LocalEstimate{v, std::move(value), verdict});
    verdicts.push_back(verdict);
    origins.push_back(v);
  }

  run.trace = FloodNetwork(g).run(origins, verdicts, d);

  for (const Edge& e : g.edges()) {
    const auto& at_x = run.trace.inbox[e.u];
    const auto& at_y = run.trace.inbox[e.v];
    std::optional<NodeId> origin;
    if (d == 0) {
      if (*find_verdict(at_x, e.u) == Verdict::kInfeasible) {
        origin = e.u;
      } else if (*find_verdict(at_y, e.v) == Verdict::kInfeasible) {
        origin = e.v;
      }
    } else {
      for (const auto& entry : at_x) {
        if (entry.verdict != Verdict::kInfeasible) continue;
        const Verdict* other = find_verdict(at_y, entry.origin);
        if (other != nullptr && *other == Verdict::kInfeasible) {
          origin = entry.origin;
          break;
        }
      }
    }
    report.decisions.push_back(origin ? FlowDecision::kReject : FlowDecision::kAccept);
    report.rejected_by.push_back(origin);
  }
  return run;
}

std::string format_trace(const SimTrace& trace) {
  std::ostringstream out;
  for (const auto& r : trace.records) {
    out << r.round << " " << r.sender << " " << r.receiver << " " << r.message.origin << " "
        << to_string(r.message.verdict) << " " << r.message.counter << "\n";
  }
  return out.str();
}

}  // namespace qosadmit
