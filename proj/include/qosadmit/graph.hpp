#ifndef QOSADMIT_GRAPH_HPP
#define QOSADMIT_GRAPH_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qosadmit {

using NodeId = int;

/// Sorted list of distinct node ids.
using NodeSet = std::vector<NodeId>;

/// Unordered pair stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  Edge() = default;
  Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Instance-size caps for the exponential enumerations.
struct Limits {
  std::size_t max_matching_edges = 24;
  std::size_t max_enumeration_nodes = 20;
  std::size_t max_odd_hole_nodes = 16;
  std::size_t max_density_nodes = 16;
};

/// Simple undirected graph on nodes 0..n-1. Immutable once built; edges are
/// kept sorted so edge indices are stable and iteration is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, deduplicating repeated pairs in either orientation.
  /// Throws InvalidArgument on self-loops or out-of-range ids.
  static Graph build(int node_count, std::span<const std::pair<NodeId, NodeId>> edges);
  static Graph build(int node_count, std::span<const Edge> edges);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool adjacent(NodeId u, NodeId v) const;
  const std::vector<NodeId>& neighbors(NodeId v) const { return adjacency_.at(v); }
  int degree(NodeId v) const { return static_cast<int>(neighbors(v).size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_.at(index); }
  /// Index of {u,v} in edges(), or nullopt if absent.
  std::optional<int> edge_index(NodeId u, NodeId v) const;

  /// Adjacency bitmask of v; requires node_count() <= 64.
  std::uint64_t neighbor_mask(NodeId v) const;

  friend bool operator==(const Graph& lhs, const Graph& rhs) {
    return lhs.adjacency_.size() == rhs.adjacency_.size() && lhs.edges_ == rhs.edges_;
  }

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<Edge> edges_;
};

/// Induced subgraph together with the relabeling back to the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<NodeId> to_parent;    // sub node -> parent node
  std::vector<int> parent_edge;     // sub edge index -> parent edge index
};

/// Bijection between edges of a network graph and vertices of its line graph.
/// Line-graph vertex i corresponds to edge i of the network graph.
struct EdgeIndexMap {
  std::vector<Edge> vertex_to_edge;

  Edge edge_of(NodeId line_vertex) const { return vertex_to_edge.at(line_vertex); }
  std::optional<NodeId> vertex_of(const Edge& e) const;
};

struct LineGraph {
  Graph graph;
  EdgeIndexMap map;
};

struct InducedStar {
  int size = 0;
  std::optional<NodeId> center;
  NodeSet leaves;
};

struct Claw {
  NodeId center = 0;
  std::array<NodeId, 3> leaves{};
};

/// Nodes within graph distance d of v.
NodeSet ball(const Graph& g, NodeId v, int d);

/// Graph distances from source (-1 for unreachable).
std::vector<int> bfs_distances(const Graph& g, NodeId source);

InducedSubgraph induced_subgraph(const Graph& g, const NodeSet& nodes);

LineGraph line_graph(const Graph& g);

/// All matchings (as sorted edge-index lists), the empty matching first.
std::vector<std::vector<int>> enumerate_matchings(const Graph& g, const Limits& limits = {});

/// All independent sets including the empty set.
std::vector<NodeSet> enumerate_independent_sets(const Graph& g, const Limits& limits = {});

/// Inclusion-maximal independent sets, in lexicographic order.
std::vector<NodeSet> maximal_independent_sets(const Graph& g, const Limits& limits = {});

/// Inclusion-maximal cliques, in lexicographic order.
std::vector<NodeSet> maximal_cliques(const Graph& g, const Limits& limits = {});

int independence_number(const Graph& g, const Limits& limits = {});

/// Lexicographically first maximum independent set (as a sorted list).
NodeSet maximum_independent_set(const Graph& g, const Limits& limits = {});

/// Largest independent set inside a single open neighborhood, with the
/// lowest-id center attaining it. Edgeless graphs give 0 and no center.
InducedStar induced_star_number(const Graph& g, const Limits& limits = {});

std::optional<Claw> contains_claw(const Graph& g, const Limits& limits = {});

/// Shortest induced odd cycle of length >= 5, if any.
std::optional<int> min_odd_hole_length(const Graph& g, const Limits& limits = {});

/// G[v <- K_r]: the remaining nodes keep their relative order (ids above v
/// shift down by one) and the r clique nodes are appended at the end.
Graph replace_vertex_with_clique(const Graph& g, NodeId v, int r);

/// Complement graph on the same node set.
Graph complement(const Graph& g);

}  // namespace qosadmit

#endif  // QOSADMIT_GRAPH_HPP
