#include "qosadmit/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <string>

#include "qosadmit/errors.hpp"

namespace qosadmit {

namespace {

using Mask = std::uint64_t;

constexpr int kMaskBits = 64;

void check_cap(const char* what, std::size_t size, std::size_t cap) {
  if (size > cap) throw CapExceeded(what, size, cap);
}

void check_node(const Graph& g, NodeId v) {
  if (v < 0 || v >= g.node_count()) {
    throw InvalidArgument("node " + std::to_string(v) + " out of range for graph with " +
                          std::to_string(g.node_count()) + " nodes");
  }
}

Mask bit(int i) { return Mask{1} << i; }

int lowest(Mask m) { return std::countr_zero(m); }

NodeSet mask_to_set(Mask m) {
  NodeSet out;
  while (m != 0) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.node_count() > kMaskBits) throw CapExceeded("bitmask graph", g.node_count(), kMaskBits);
  std::vector<Mask> masks(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) masks[v] = g.neighbor_mask(v);
  return masks;
}

// Bron-Kerbosch with pivoting over an arbitrary adjacency relation.
void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x,
                   std::vector<NodeSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(mask_to_set(r));
    return;
  }
  const Mask px = p | x;
  int pivot = lowest(px);
  int best = -1;
  for (Mask m = px; m != 0; m &= m - 1) {
    const int u = lowest(m);
    const int covered = std::popcount(p & adj[u]);
    if (covered > best) {
      best = covered;
      pivot = u;
    }
  }
  for (Mask m = p & ~adj[pivot]; m != 0; m &= m - 1) {
    const int v = lowest(m);
    bron_kerbosch(adj, r | bit(v), p & adj[v], x & adj[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

struct MaxIndependentSearch {
  const std::vector<Mask>& adj;
  Mask best = 0;
  int best_size = -1;

  void run(Mask current, int size, Mask candidates) {
    if (size + std::popcount(candidates) <= best_size) return;
    if (candidates == 0) {
      best = current;
      best_size = size;
      return;
    }
    const int v = lowest(candidates);
    run(current | bit(v), size + 1, candidates & ~adj[v] & ~bit(v));
    run(current, size, candidates & ~bit(v));
  }
};

Mask max_independent_mask(const std::vector<Mask>& adj, Mask within) {
  MaxIndependentSearch search{adj};
  search.run(0, 0, within);
  return search.best;
}

}  // namespace

Graph Graph::build(int node_count, std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<Edge> converted;
  converted.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u == v) throw InvalidArgument("self-loop at node " + std::to_string(u));
    converted.emplace_back(u, v);
  }
  return build(node_count, std::span<const Edge>(converted));
}

Graph Graph::build(int node_count, std::span<const Edge> edges) {
  if (node_count < 0) throw InvalidArgument("negative node count");
  Graph g;
  g.adjacency_.resize(node_count);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InvalidArgument("self-loop at node " + std::to_string(e.u));
    if (e.u < 0 || e.v >= node_count) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} out of range for " + std::to_string(node_count) + " nodes");
    }
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<int> Graph::edge_index(NodeId u, NodeId v) const {
  if (u == v) return std::nullopt;
  const Edge key(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::uint64_t Graph::neighbor_mask(NodeId v) const {
  Mask m = 0;
  for (NodeId u : neighbors(v)) {
    if (u >= kMaskBits) throw CapExceeded("bitmask graph", node_count(), kMaskBits);
    m |= bit(u);
  }
  return m;
}

std::optional<NodeId> EdgeIndexMap::vertex_of(const Edge& e) const {
  const auto it = std::lower_bound(vertex_to_edge.begin(), vertex_to_edge.end(), e);
  if (it == vertex_to_edge.end() || *it != e) return std::nullopt;
  return static_cast<NodeId>(it - vertex_to_edge.begin());
}

std::vector<int> bfs_distances(const Graph& g, NodeId source) {
  check_node(g, source);
  std::vector<int> dist(g.node_count(), -1);
  std::queue<NodeId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

NodeSet ball(const Graph& g, NodeId v, int d) {
  check_node(g, v);
  if (d < 0) throw InvalidArgument("ball radius must be nonnegative");
  std::vector<int> dist(g.node_count(), -1);
  std::vector<NodeId> layer{v};
  dist[v] = 0;
  for (int depth = 1; depth <= d && !layer.empty(); ++depth) {
    std::vector<NodeId> next;
    for (NodeId u : layer) {
      for (NodeId w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = depth;
          next.push_back(w);
        }
      }
    }
    layer = std::move(next);
  }
  NodeSet out;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (dist[u] >= 0) out.push_back(u);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const NodeSet& nodes) {
  std::vector<int> position(g.node_count(), -1);
  InducedSubgraph sub;
  for (NodeId v : nodes) {
    check_node(g, v);
    if (position[v] >= 0) throw InvalidArgument("duplicate node in subset");
    position[v] = static_cast<int>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, int>> tagged;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (position[e.u] >= 0 && position[e.v] >= 0) {
      tagged.emplace_back(Edge(position[e.u], position[e.v]), i);
    }
  }
  std::sort(tagged.begin(), tagged.end());
  for (const auto& [e, parent] : tagged) {
    edges.push_back(e);
    sub.parent_edge.push_back(parent);
  }
  sub.graph = Graph::build(static_cast<int>(nodes.size()), std::span<const Edge>(edges));
  return sub;
}

LineGraph line_graph(const Graph& g) {
  LineGraph lg;
  lg.map.vertex_to_edge = g.edges();
  std::vector<Edge> edges;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    std::vector<int> incident;
    for (NodeId w : g.neighbors(v)) incident.push_back(*g.edge_index(v, w));
    for (std::size_t i = 0; i < incident.size(); ++i) {
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        edges.emplace_back(incident[i], incident[j]);
      }
    }
  }
  lg.graph = Graph::build(g.edge_count(), std::span<const Edge>(edges));
  return lg;
}

std::vector<std::vector<int>> enumerate_matchings(const Graph& g, const Limits& limits) {
  check_cap("matching enumeration edge set", g.edge_count(), limits.max_matching_edges);
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<char> covered(g.node_count(), 0);
  std::function<void(int)> extend = [&](int next) {
    out.push_back(current);
    for (int i = next; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (covered[e.u] || covered[e.v]) continue;
      covered[e.u] = covered[e.v] = 1;
      current.push_back(i);
      extend(i + 1);
      current.pop_back();
      covered[e.u] = covered[e.v] = 0;
    }
  };
  extend(0);
  return out;
}

std::vector<NodeSet> enumerate_independent_sets(const Graph& g, const Limits& limits) {
  check_cap("independent-set enumeration graph", g.node_count(), limits.max_enumeration_nodes);
  const auto adj = adjacency_masks(g);
  std::vector<NodeSet> out;
  NodeSet current;
  std::function<void(int, Mask)> extend = [&](int next, Mask blocked) {
    out.push_back(current);
    for (int v = next; v < g.node_count(); ++v) {
      if (blocked & bit(v)) continue;
      current.push_back(v);
      extend(v + 1, blocked | adj[v]);
      current.pop_back();
    }
  };
  extend(0, 0);
  return out;
}

std::vector<NodeSet> maximal_cliques(const Graph& g, const Limits& limits) {
  check_cap("clique enumeration graph", g.node_count(), limits.max_enumeration_nodes);
  std::vector<NodeSet> out;
  if (g.node_count() == 0) return out;
  const auto adj = adjacency_masks(g);
  const Mask all = g.node_count() == kMaskBits ? ~Mask{0} : bit(g.node_count()) - 1;
  bron_kerbosch(adj, 0, all, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeSet> maximal_independent_sets(const Graph& g, const Limits& limits) {
  check_cap("independent-set enumeration graph", g.node_count(), limits.max_enumeration_nodes);
  return maximal_cliques(complement(g), limits);
}

NodeSet maximum_independent_set(const Graph& g, const Limits& limits) {
  check_cap("independence number graph", g.node_count(), limits.max_enumeration_nodes);
  const auto adj = adjacency_masks(g);
  const Mask all = g.node_count() == kMaskBits ? ~Mask{0} : bit(g.node_count()) - 1;
  return mask_to_set(max_independent_mask(adj, all));
}

int independence_number(const Graph& g, const Limits& limits) {
  return static_cast<int>(maximum_independent_set(g, limits).size());
}

InducedStar induced_star_number(const Graph& g, const Limits& limits) {
  InducedStar star;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) continue;
    const auto sub = induced_subgraph(g, g.neighbors(v));
    const NodeSet local = maximum_independent_set(sub.graph, limits);
    if (static_cast<int>(local.size()) > star.size) {
      star.size = static_cast<int>(local.size());
      star.center = v;
      star.leaves.clear();
      for (NodeId u : local) star.leaves.push_back(sub.to_parent[u]);
    }
  }
  return star;
}

std::optional<Claw> contains_claw(const Graph& g, const Limits& limits) {
  const InducedStar star = induced_star_number(g, limits);
  if (star.size < 3) return std::nullopt;
  return Claw{*star.center, {star.leaves[0], star.leaves[1], star.leaves[2]}};
}

std::optional<int> min_odd_hole_length(const Graph& g, const Limits& limits) {
  check_cap("odd-hole search graph", g.node_count(), limits.max_odd_hole_nodes);
  const auto adj = adjacency_masks(g);
  const int n = g.node_count();
  int best = n + 1;  // odd holes have length <= n

  // Induced paths start at their smallest vertex s; every later vertex is > s.
  std::vector<int> path;
  std::function<void(Mask, Mask)> extend = [&](Mask on_path, Mask interior_nbrs) {
    const int s = path.front();
    const int last = path.back();
    const int len = static_cast<int>(path.size());
    if (len + 1 >= best) return;
    for (Mask m = adj[last] & ~on_path; m != 0; m &= m - 1) {
      const int y = lowest(m);
      if (y < s) continue;
      if (interior_nbrs & bit(y)) continue;  // chord to an interior vertex
      if (len >= 2 && (adj[y] & bit(s))) {
        // y closes a cycle s..last,y; it cannot be extended past without a chord.
        const int cycle = len + 1;
        if (cycle >= 5 && cycle % 2 == 1 && cycle < best) best = cycle;
        continue;
      }
      path.push_back(y);
      // the former last vertex becomes interior; s stays special
      const Mask next_interior = len >= 2 ? interior_nbrs | adj[last] | bit(last)
                                          : interior_nbrs;
      extend(on_path | bit(y), next_interior);
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    extend(bit(s), 0);
  }
  if (best > n) return std::nullopt;
  return best;
}

Graph replace_vertex_with_clique(const Graph& g, NodeId v, int r) {
  check_node(g, v);
  if (r < 1) throw InvalidArgument("clique size must be at least 1");
  const int n = g.node_count();
  auto relabel = [v](NodeId u) { return u < v ? u : u - 1; };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) edges.emplace_back(relabel(e.u), relabel(e.v));
  }
  const int first = n - 1;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) edges.emplace_back(first + i, first + j);
    for (NodeId w : g.neighbors(v)) edges.emplace_back(first + i, relabel(w));
  }
  return Graph::build(n - 1 + r, std::span<const Edge>(edges));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId w = u + 1; w < g.node_count(); ++w) {
      if (!g.adjacent(u, w)) edges.emplace_back(u, w);
    }
  }
  return Graph::build(g.node_count(), std::span<const Edge>(edges));
}

}  // namespace qosadmit
