#ifndef QOSADMIT_INTERFERENCE_HPP
#define QOSADMIT_INTERFERENCE_HPP

#include <optional>
#include <vector>

#include "qosadmit/graph.hpp"
#include "qosadmit/rational.hpp"

namespace qosadmit {

/// A transmitter and one or two receivers (sorted by node id, which on a
/// line network is also left-to-right order).
struct Transmission {
  NodeId transmitter = 0;
  std::vector<NodeId> receivers;

  NodeId rightmost_receiver() const { return receivers.back(); }
  bool is_unicast() const { return receivers.size() == 1; }

  friend auto operator<=>(const Transmission&, const Transmission&) = default;
};

/// Nodes on a line at exact positions with a common transmission radius.
struct LineNetwork {
  std::vector<Rational> positions;
  Rational range;
  std::vector<Transmission> transmissions;
  /// True iff x[i+3] - x[i] > range for every applicable i, i.e. every node
  /// reaches at most two nodes to its right.
  bool spacing_ok = true;
  /// First i where the spacing constraint fails.
  std::optional<int> spacing_violation;

  int node_count() const { return static_cast<int>(positions.size()); }
  Rational distance(NodeId a, NodeId b) const;
};

/// How rules (d)/(e) treat a receiver equidistant from both transmitters.
enum class TieRule {
  /// Equal distance counts as interference; matches the closed-interval
  /// adjacency characterization of eastward unicasts.
  kInterfere,
  /// Only a strictly closer foreign transmitter interferes.
  kStrict,
};

struct ConflictGraph {
  enum class Source { kLinks, kTransmissions };

  Graph graph;
  Source source = Source::kLinks;
  std::vector<Edge> links;                   // when source == kLinks
  std::vector<Transmission> transmissions;   // when source == kTransmissions
};

/// Primary interference: the line graph, vertex i labelled by edge i of g.
ConflictGraph primary_conflict_graph(const Graph& g);

/// Validates positions, radius and transmissions. Spacing violations are
/// reported through spacing_ok / spacing_violation rather than thrown.
/// Throws InvalidArgument for non-increasing positions, nonpositive radius,
/// receivers out of range, westward or self transmissions, or more than two
/// receivers.
LineNetwork validate_line_network(std::vector<Rational> positions, Rational range,
                                  std::vector<Transmission> transmissions);

/// Rules (a)-(e) of the protocol interference model for one pair.
bool transmissions_conflict(const LineNetwork& net, const Transmission& first,
                            const Transmission& second, TieRule ties = TieRule::kInterfere);

ConflictGraph protocol_conflict_graph(const LineNetwork& net,
                                      TieRule ties = TieRule::kInterfere);

/// Adjacency of eastward unicasts (A,B) and (C,D) with C not left of A,
/// from positions alone: C in [a, 2b - a] (closed for kInterfere, right-open
/// for kStrict).
bool unicast_adjacent(const Rational& a, const Rational& b, const Rational& c,
                      const Rational& d, TieRule ties = TieRule::kInterfere);

struct UnicastNormalization {
  /// Distinct unicasts in order of first appearance.
  std::vector<Transmission> transmissions;
  /// How many input transmissions collapsed onto each unicast.
  std::vector<int> multiplicity;
  /// Input index -> index into transmissions.
  std::vector<int> source_index;
};

/// Replaces each two-receiver multicast by a unicast to its rightmost
/// receiver and merges exact duplicates.
UnicastNormalization normalize_to_unicast(const std::vector<Transmission>& transmissions);

/// Every valid eastward unicast of the network (transmitter, receiver within
/// range to the right), ordered by transmitter then receiver.
std::vector<Transmission> valid_unicasts(const LineNetwork& net);

}  // namespace qosadmit

#endif  // QOSADMIT_INTERFERENCE_HPP
