#include "qosadmit/feasibility.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "qosadmit/covering_lp.hpp"
#include "qosadmit/errors.hpp"

namespace qosadmit {

namespace {

void require_edge_demands(const Graph& g, const DemandVector& tau) {
  if (tau.size() != static_cast<std::size_t>(g.edge_count())) {
    throw InvalidArgument("demand vector has " + std::to_string(tau.size()) +
                          " entries but the network graph has " +
                          std::to_string(g.edge_count()) + " links");
  }
}

void require_vertex_demands(const Graph& g, const DemandVector& tau) {
  if (tau.size() != static_cast<std::size_t>(g.node_count())) {
    throw InvalidArgument("demand vector has " + std::to_string(tau.size()) +
                          " entries but the conflict graph has " +
                          std::to_string(g.node_count()) + " vertices");
  }
}

const Rational& four_fifths() {
  static const Rational value(4, 5);
  return value;
}

}  // namespace

DemandVector::DemandVector(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].sign() < 0) {
      throw InvalidArgument("negative demand at index " + std::to_string(i));
    }
  }
}

DemandVector DemandVector::from_rates(const std::vector<Rational>& flow,
                                      const std::vector<Rational>& capacity) {
  if (flow.size() != capacity.size()) throw InvalidArgument("flow/capacity length mismatch");
  std::vector<Rational> values;
  values.reserve(flow.size());
  for (std::size_t i = 0; i < flow.size(); ++i) {
    if (capacity[i].sign() <= 0) throw InvalidArgument("link capacity must be positive");
    values.push_back(flow[i] / capacity[i]);
  }
  return DemandVector(std::move(values));
}

DemandVector DemandVector::uniform(std::size_t size, const Rational& value) {
  return DemandVector(std::vector<Rational>(size, value));
}

DemandVector DemandVector::scaled(const Rational& factor) const {
  std::vector<Rational> values;
  values.reserve(values_.size());
  for (const auto& v : values_) values.push_back(v * factor);
  return DemandVector(std::move(values));
}

DemandVector DemandVector::restricted(const std::vector<int>& indices) const {
  std::vector<Rational> values;
  values.reserve(indices.size());
  for (int i : indices) values.push_back(values_.at(i));
  return DemandVector(std::move(values));
}

Rational DemandVector::max() const {
  Rational best;
  for (const auto& v : values_) best = std::max(best, v);
  return best;
}

Rational demand_degree(const Graph& g, const DemandVector& tau, NodeId v) {
  require_edge_demands(g, tau);
  if (v < 0 || v >= g.node_count()) throw InvalidArgument("node out of range");
  Rational sum;
  for (NodeId w : g.neighbors(v)) sum += tau[*g.edge_index(v, w)];
  return sum;
}

DegreeMax max_demand_degree(const Graph& g, const DemandVector& tau) {
  require_edge_demands(g, tau);
  DegreeMax best;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    Rational value = demand_degree(g, tau, v);
    if (best.node < 0 || value > best.value) {
      best.value = std::move(value);
      best.node = v;
    }
  }
  return best;
}

DensityBound density(const Graph& g, const DemandVector& tau, const Limits& limits) {
  require_edge_demands(g, tau);
  const int n = g.node_count();
  if (static_cast<std::size_t>(n) > limits.max_density_nodes) {
    throw CapExceeded("density enumeration graph", n, limits.max_density_nodes);
  }
  DensityBound best;
  NodeSet current;
  // Subsets are grown in increasing node order; `inside` is the demand of the
  // edges induced by `current`.
  std::function<void(int, const Rational&)> extend = [&](int next, const Rational& inside) {
    const int k = static_cast<int>(current.size());
    if (k >= 3 && k % 2 == 1) {
      Rational value = inside * Rational(2, k - 1);
      if (value > best.value) {
        best.value = std::move(value);
        best.witness = current;
      }
    }
    for (NodeId v = next; v < n; ++v) {
      Rational grown = inside;
      for (NodeId u : current) {
        if (const auto e = g.edge_index(u, v)) grown += tau[*e];
      }
      current.push_back(v);
      extend(v + 1, grown);
      current.pop_back();
    }
  };
  extend(0, Rational(0));
  return best;
}

Rational fractional_chromatic_index(const Graph& g, const DemandVector& tau,
                                    const Limits& limits) {
  const DegreeMax degree = max_demand_degree(g, tau);
  const DensityBound odd = density(g, tau, limits);
  return std::max(degree.value, odd.value);
}

LpResult fractional_chromatic_number_lp(const Graph& conflict, const DemandVector& tau,
                                        const Limits& limits) {
  require_vertex_demands(conflict, tau);
  LpResult result;
  if (conflict.node_count() == 0) return result;
  const auto columns = maximal_independent_sets(conflict, limits);
  const CoveringSolution solution = solve_covering_lp(columns, tau.values());
  result.value = solution.value;
  result.prices = solution.prices;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (solution.weights[j].sign() > 0) {
      result.column_weights.emplace_back(columns[j], solution.weights[j]);
    }
  }
  return result;
}

LpResult fractional_chromatic_number_lp(const ConflictGraph& conflict, const DemandVector& tau,
                                        const Limits& limits) {
  return fractional_chromatic_number_lp(conflict.graph, tau, limits);
}

CliqueBound clique_bound(const Graph& conflict, const DemandVector& tau, const Limits& limits) {
  require_vertex_demands(conflict, tau);
  CliqueBound best;
  for (const auto& clique : maximal_cliques(conflict, limits)) {
    Rational sum;
    for (NodeId v : clique) sum += tau[v];
    if (best.clique.empty() || sum > best.value) {
      best.value = std::move(sum);
      best.clique = clique;
    }
  }
  return best;
}

CliqueBound clique_bound(const ConflictGraph& conflict, const DemandVector& tau,
                         const Limits& limits) {
  return clique_bound(conflict.graph, tau, limits);
}

Rational imperfection_ratio(const ConflictGraph& conflict, const Limits& limits) {
  if (conflict.source != ConflictGraph::Source::kLinks) {
    throw InvalidArgument(
        "imperfection ratio closed form applies only to primary-interference conflict graphs");
  }
  const auto hole = min_odd_hole_length(conflict.graph, limits);
  if (!hole) return Rational(1);
  return Rational(*hole, *hole - 1);
}

FeasibilityVerdict check_row_constraints(const Graph& conflict, const DemandVector& tau,
                                         const Rational& threshold) {
  require_vertex_demands(conflict, tau);
  FeasibilityVerdict verdict;
  for (NodeId v = 0; v < conflict.node_count(); ++v) {
    Rational sum = tau[v];
    for (NodeId w : conflict.neighbors(v)) sum += tau[w];
    if (verdict.witness.empty() || sum > verdict.bound_value) {
      verdict.bound_value = std::move(sum);
      verdict.witness_kind = FeasibilityVerdict::Witness::kVertex;
      verdict.witness = {v};
    }
  }
  verdict.accepted = verdict.bound_value <= threshold;
  return verdict;
}

FeasibilityVerdict check_row_constraints(const ConflictGraph& conflict, const DemandVector& tau,
                                         const Rational& threshold) {
  return check_row_constraints(conflict.graph, tau, threshold);
}

FeasibilityVerdict check_degree_condition(const Graph& conflict, const DemandVector& tau) {
  require_vertex_demands(conflict, tau);
  FeasibilityVerdict verdict;
  for (NodeId v = 0; v < conflict.node_count(); ++v) {
    Rational load = tau[v] * Rational(conflict.degree(v) + 1);
    if (verdict.witness.empty() || load > verdict.bound_value) {
      verdict.bound_value = std::move(load);
      verdict.witness_kind = FeasibilityVerdict::Witness::kVertex;
      verdict.witness = {v};
    }
  }
  verdict.accepted = verdict.bound_value <= Rational(1);
  return verdict;
}

FeasibilityVerdict check_degree_condition(const ConflictGraph& conflict,
                                          const DemandVector& tau) {
  return check_degree_condition(conflict.graph, tau);
}

FeasibilityVerdict check_shannon_condition(const Graph& g, const DemandVector& tau) {
  const DegreeMax degree = max_demand_degree(g, tau);
  FeasibilityVerdict verdict;
  verdict.bound_value = degree.value;
  if (degree.node >= 0) {
    verdict.witness_kind = FeasibilityVerdict::Witness::kVertex;
    verdict.witness = {degree.node};
  }
  verdict.accepted = verdict.bound_value <= Rational(2, 3);
  return verdict;
}

FeasibilityVerdict check_d1_condition(const Graph& g, const DemandVector& tau) {
  FeasibilityVerdict verdict = check_shannon_condition(g, tau);
  for (const Edge& e : g.edges()) {
    for (NodeId w : g.neighbors(e.v)) {
      if (w <= e.v || !g.adjacent(e.u, w)) continue;
      Rational sum = tau[*g.edge_index(e.u, e.v)] + tau[*g.edge_index(e.u, w)] +
                     tau[*g.edge_index(e.v, w)];
      if (sum > verdict.bound_value) {
        verdict.bound_value = std::move(sum);
        verdict.witness_kind = FeasibilityVerdict::Witness::kTriangle;
        verdict.witness = {e.u, e.v, w};
      }
    }
  }
  verdict.accepted = verdict.bound_value <= four_fifths();
  return verdict;
}

}  // namespace qosadmit
