// Brute-force reference computations for the tests. Everything here works
// straight from definitions over explicit subset enumeration and shares no
// code path with the library algorithms it checks.
#ifndef QOSADMIT_TESTS_ORACLES_HPP
#define QOSADMIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qosadmit/graph.hpp"
#include "qosadmit/rational.hpp"

namespace oracle {

using qosadmit::Graph;
using qosadmit::NodeSet;
using qosadmit::Rational;

inline bool adjacent(const Graph& g, int u, int v) {
  for (const auto& e : g.edges()) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
  }
  return false;
}

inline std::vector<int> members(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (mask & (1u << i)) out.push_back(i);
  }
  return out;
}

inline bool independent(const Graph& g, std::uint32_t mask) {
  const auto m = members(mask);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (adjacent(g, m[i], m[j])) return false;
    }
  }
  return true;
}

inline bool clique(const Graph& g, std::uint32_t mask) {
  const auto m = members(mask);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!adjacent(g, m[i], m[j])) return false;
    }
  }
  return true;
}

/// All-pairs hop distances by Floyd-Warshall (-1 when unreachable).
inline std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = g.node_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (auto& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

inline int count_independent_sets(const Graph& g) {
  int count = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.node_count()); ++mask) count += independent(g, mask);
  return count;
}

inline int count_matchings(const Graph& g) {
  int count = 0;
  const int m = g.edge_count();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> used(g.node_count(), 0);
    bool ok = true;
    for (int i : members(mask)) {
      if (used[g.edge(i).u]++ || used[g.edge(i).v]++) ok = false;
    }
    count += ok;
  }
  return count;
}

inline int independence_number(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.node_count()); ++mask) {
    if (independent(g, mask)) best = std::max(best, static_cast<int>(members(mask).size()));
  }
  return best;
}

inline std::vector<NodeSet> maximal_cliques(const Graph& g) {
  const int n = g.node_count();
  std::vector<NodeSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!clique(g, mask)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!(mask & (1u << v)) && clique(g, mask | (1u << v))) maximal = false;
    }
    if (maximal) out.push_back(members(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// max over v of the largest independent subset of the open neighborhood.
inline int induced_star_number(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.node_count(); ++v) {
    for (std::uint32_t mask = 0; mask < (1u << g.node_count()); ++mask) {
      bool inside = true;
      for (int u : members(mask)) inside = inside && adjacent(g, u, v);
      if (inside && independent(g, mask)) best = std::max(best, static_cast<int>(members(mask).size()));
    }
  }
  return best;
}

/// Smallest odd k >= 5 such that some k-subset induces a connected 2-regular
/// graph (a chordless cycle); 0 if none.
inline int min_odd_hole(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.node_count()); ++mask) {
    const auto m = members(mask);
    const int k = static_cast<int>(m.size());
    if (k < 5 || k % 2 == 0 || (best != 0 && k >= best)) continue;
    bool two_regular = true;
    for (int u : m) {
      int deg = 0;
      for (int w : m) deg += adjacent(g, u, w);
      two_regular = two_regular && deg == 2;
    }
    if (!two_regular) continue;
    // connected: walk the cycle from m[0]
    int prev = -1, cur = m[0], steps = 0;
    do {
      int next = -1;
      for (int w : m) {
        if (w != prev && adjacent(g, cur, w)) {
          next = w;
          break;
        }
      }
      prev = cur;
      cur = next;
      ++steps;
    } while (cur != m[0] && steps <= k);
    if (steps == k) best = k;
  }
  return best;
}

inline Rational vertex_load(const Graph& g, const std::vector<Rational>& tau, int v) {
  Rational sum;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (g.edge(i).u == v || g.edge(i).v == v) sum += tau[i];
  }
  return sum;
}

/// max over odd node subsets S (|S| >= 3) of 2 tau(E[S]) / (|S| - 1).
inline Rational odd_density(const Graph& g, const std::vector<Rational>& tau) {
  Rational best;
  for (std::uint32_t mask = 0; mask < (1u << g.node_count()); ++mask) {
    const int k = static_cast<int>(members(mask).size());
    if (k < 3 || k % 2 == 0) continue;
    Rational inside;
    for (int i = 0; i < g.edge_count(); ++i) {
      if ((mask >> g.edge(i).u & 1u) && (mask >> g.edge(i).v & 1u)) inside += tau[i];
    }
    best = std::max(best, Rational(2) * inside / Rational(k - 1));
  }
  return best;
}

inline Rational fractional_chromatic_index(const Graph& g, const std::vector<Rational>& tau) {
  Rational best = odd_density(g, tau);
  for (int v = 0; v < g.node_count(); ++v) best = std::max(best, vertex_load(g, tau, v));
  return best;
}

/// Checks a claimed LP optimum from first principles: the primal columns are
/// independent and cover the demand, the dual prices are nonnegative and cost
/// at most 1 on every independent set, and both objectives equal `value`.
inline bool lp_certificate_holds(const Graph& g, const std::vector<Rational>& tau,
                                 const Rational& value,
                                 const std::vector<std::pair<NodeSet, Rational>>& columns,
                                 const std::vector<Rational>& prices) {
  const int n = g.node_count();
  std::vector<Rational> covered(n);
  Rational primal;
  for (const auto& [set, weight] : columns) {
    if (weight.sign() < 0) return false;
    std::uint32_t mask = 0;
    for (int v : set) mask |= 1u << v;
    if (!independent(g, mask)) return false;
    for (int v : set) covered[v] += weight;
    primal += weight;
  }
  if (primal != value) return false;
  Rational dual;
  for (int v = 0; v < n; ++v) {
    if (covered[v] < tau[v] || prices[v].sign() < 0) return false;
    dual += tau[v] * prices[v];
  }
  if (dual != value) return false;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!independent(g, mask)) continue;
    Rational cost;
    for (int v : members(mask)) cost += prices[v];
    if (cost > Rational(1)) return false;
  }
  return true;
}

}  // namespace oracle

#endif  // QOSADMIT_TESTS_ORACLES_HPP
