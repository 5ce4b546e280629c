#include "qosadmit/interference.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qosadmit/errors.hpp"

namespace qosadmit {

namespace {

Rational abs_diff(const Rational& x, const Rational& y) {
  Rational diff = x - y;
  return diff.sign() < 0 ? -diff : diff;
}

bool contains(const std::vector<NodeId>& sorted, NodeId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Rule (d) seen from `victim`: some receiver of victim is closer (or, under
// kInterfere, no farther) to the other transmitter than to its own.
bool receiver_disturbed(const LineNetwork& net, const Transmission& victim,
                        NodeId other_transmitter, TieRule ties) {
  for (NodeId j : victim.receivers) {
    const Rational foreign = net.distance(other_transmitter, j);
    const Rational own = net.distance(victim.transmitter, j);
    if (foreign < own || (ties == TieRule::kInterfere && foreign == own)) return true;
  }
  return false;
}

}  // namespace

Rational LineNetwork::distance(NodeId a, NodeId b) const {
  return abs_diff(positions.at(a), positions.at(b));
}

ConflictGraph primary_conflict_graph(const Graph& g) {
  LineGraph lg = line_graph(g);
  ConflictGraph cg;
  cg.graph = std::move(lg.graph);
  cg.source = ConflictGraph::Source::kLinks;
  cg.links = std::move(lg.map.vertex_to_edge);
  return cg;
}

LineNetwork validate_line_network(std::vector<Rational> positions, Rational range,
                                  std::vector<Transmission> transmissions) {
  if (range.sign() <= 0) throw InvalidArgument("transmission radius must be positive");
  for (std::size_t i = 1; i < positions.size(); ++i) {
    if (!(positions[i - 1] < positions[i])) {
      throw InvalidArgument("positions must be strictly increasing (node " + std::to_string(i) +
                            ")");
    }
  }
  LineNetwork net;
  net.positions = std::move(positions);
  net.range = std::move(range);
  const int n = net.node_count();
  for (auto& t : transmissions) {
    if (t.transmitter < 0 || t.transmitter >= n) {
      throw InvalidArgument("transmitter " + std::to_string(t.transmitter) + " out of range");
    }
    if (t.receivers.empty() || t.receivers.size() > 2) {
      throw InvalidArgument("a transmission needs one or two receivers");
    }
    std::sort(t.receivers.begin(), t.receivers.end());
    if (std::adjacent_find(t.receivers.begin(), t.receivers.end()) != t.receivers.end()) {
      throw InvalidArgument("duplicate receiver in transmission");
    }
    for (NodeId j : t.receivers) {
      if (j < 0 || j >= n) throw InvalidArgument("receiver " + std::to_string(j) + " out of range");
      if (j == t.transmitter) throw InvalidArgument("transmitter listed as its own receiver");
      if (net.positions[j] < net.positions[t.transmitter]) {
        throw InvalidArgument("westward transmission " + std::to_string(t.transmitter) + " -> " +
                              std::to_string(j));
      }
      if (net.distance(t.transmitter, j) > net.range) {
        throw InvalidArgument("receiver " + std::to_string(j) + " beyond the radius of node " +
                              std::to_string(t.transmitter));
      }
    }
  }
  net.transmissions = std::move(transmissions);
  for (int i = 0; i + 3 < n; ++i) {
    if (!(net.positions[i + 3] - net.positions[i] > net.range)) {
      net.spacing_ok = false;
      net.spacing_violation = i;
      break;
    }
  }
  return net;
}

bool transmissions_conflict(const LineNetwork& net, const Transmission& first,
                            const Transmission& second, TieRule ties) {
  // (a) shared transmitter
  if (first.transmitter == second.transmitter) return true;
  // (b) a transmitter is also a receiver of the other
  if (contains(second.receivers, first.transmitter) ||
      contains(first.receivers, second.transmitter)) {
    return true;
  }
  // (c) shared receiver
  for (NodeId j : first.receivers) {
    if (contains(second.receivers, j)) return true;
  }
  // (d), (e) a receiver hears the other transmitter at least as strongly
  return receiver_disturbed(net, first, second.transmitter, ties) ||
         receiver_disturbed(net, second, first.transmitter, ties);
}

ConflictGraph protocol_conflict_graph(const LineNetwork& net, TieRule ties) {
  const auto& ts = net.transmissions;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (transmissions_conflict(net, ts[i], ts[j], ties)) {
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
  }
  ConflictGraph cg;
  cg.graph = Graph::build(static_cast<int>(ts.size()), std::span<const Edge>(edges));
  cg.source = ConflictGraph::Source::kTransmissions;
  cg.transmissions = ts;
  return cg;
}

bool unicast_adjacent(const Rational& a, const Rational& b, const Rational& c,
                      const Rational& d, TieRule ties) {
  if (a > b || c > d) throw InvalidArgument("unicasts must be eastward (a <= b, c <= d)");
  if (c < a) throw InvalidArgument("second transmitter must not lie left of the first");
  const Rational reach = b + b - a;
  if (ties == TieRule::kInterfere) return c <= reach;
  return c == a || c < reach;
}

UnicastNormalization normalize_to_unicast(const std::vector<Transmission>& transmissions) {
  UnicastNormalization out;
  std::map<std::pair<NodeId, NodeId>, int> seen;
  for (const auto& t : transmissions) {
    if (t.receivers.empty() || t.receivers.size() > 2) {
      throw InvalidArgument("normalization supports one or two receivers per transmission");
    }
    const NodeId target = *std::max_element(t.receivers.begin(), t.receivers.end());
    const auto key = std::make_pair(t.transmitter, target);
    auto [it, inserted] = seen.try_emplace(key, static_cast<int>(out.transmissions.size()));
    if (inserted) {
      out.transmissions.push_back(Transmission{t.transmitter, {target}});
      out.multiplicity.push_back(0);
    }
    ++out.multiplicity[it->second];
    out.source_index.push_back(it->second);
  }
  return out;
}

std::vector<Transmission> valid_unicasts(const LineNetwork& net) {
  std::vector<Transmission> out;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    for (NodeId j = i + 1; j < net.node_count(); ++j) {
      if (net.distance(i, j) > net.range) break;
      out.push_back(Transmission{i, {j}});
    }
  }
  return out;
}

}  // namespace qosadmit
