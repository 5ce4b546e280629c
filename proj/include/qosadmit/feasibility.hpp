#ifndef QOSADMIT_FEASIBILITY_HPP
#define QOSADMIT_FEASIBILITY_HPP

#include <utility>
#include <vector>

#include "qosadmit/graph.hpp"
#include "qosadmit/interference.hpp"
#include "qosadmit/rational.hpp"

namespace qosadmit {

/// Per-item demand tau, indexed by edge index of a network graph or by
/// vertex id of a conflict graph. Every entry is a nonnegative rational.
class DemandVector {
 public:
  DemandVector() = default;
  explicit DemandVector(std::vector<Rational> values);

  /// tau = f / C elementwise; every capacity must be positive.
  static DemandVector from_rates(const std::vector<Rational>& flow,
                                 const std::vector<Rational>& capacity);
  static DemandVector uniform(std::size_t size, const Rational& value);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_.at(i); }
  const std::vector<Rational>& values() const { return values_; }

  DemandVector scaled(const Rational& factor) const;
  /// Entries at the given parent indices, in order.
  DemandVector restricted(const std::vector<int>& indices) const;
  Rational max() const;

 private:
  std::vector<Rational> values_;
};

struct DegreeMax {
  Rational value;
  NodeId node = -1;
};

struct DensityBound {
  Rational value;
  NodeSet witness;  // odd subset attaining the maximum, empty if none
};

struct LpResult {
  Rational value;
  /// Independent sets with positive duration.
  std::vector<std::pair<NodeSet, Rational>> column_weights;
  /// Optimal dual prices per vertex (the fractional clique certificate).
  std::vector<Rational> prices;
};

struct CliqueBound {
  Rational value;
  NodeSet clique;
};

struct FeasibilityVerdict {
  enum class Witness { kNone, kVertex, kTriangle };

  bool accepted = true;
  Rational bound_value;
  Witness witness_kind = Witness::kNone;
  NodeSet witness;
};

/// delta(tau, v): total demand of links incident to v.
Rational demand_degree(const Graph& g, const DemandVector& tau, NodeId v);

/// Delta(tau) with the lowest-id node attaining it (node -1 on empty graphs).
DegreeMax max_demand_degree(const Graph& g, const DemandVector& tau);

/// Lambda(tau): maximum over odd node subsets W, |W| >= 3, of the induced
/// demand divided by (|W| - 1) / 2.
DensityBound density(const Graph& g, const DemandVector& tau, const Limits& limits = {});

/// Minimum schedule length under primary interference, max(Delta, Lambda).
Rational fractional_chromatic_index(const Graph& g, const DemandVector& tau,
                                    const Limits& limits = {});

/// Weighted fractional chromatic number by exact LP over maximal independent
/// sets of the conflict graph.
LpResult fractional_chromatic_number_lp(const Graph& conflict, const DemandVector& tau,
                                        const Limits& limits = {});
LpResult fractional_chromatic_number_lp(const ConflictGraph& conflict, const DemandVector& tau,
                                        const Limits& limits = {});

CliqueBound clique_bound(const Graph& conflict, const DemandVector& tau,
                         const Limits& limits = {});
CliqueBound clique_bound(const ConflictGraph& conflict, const DemandVector& tau,
                         const Limits& limits = {});

/// 1 without odd holes, g/(g-1) for shortest odd hole g. Only defined for
/// conflict graphs built under primary interference (line graphs).
Rational imperfection_ratio(const ConflictGraph& conflict, const Limits& limits = {});

/// tau(l) + tau(neighbors of l) <= threshold for every conflict vertex l.
FeasibilityVerdict check_row_constraints(const Graph& conflict, const DemandVector& tau,
                                         const Rational& threshold);
FeasibilityVerdict check_row_constraints(const ConflictGraph& conflict, const DemandVector& tau,
                                         const Rational& threshold);

/// tau(l) * (deg(l) + 1) <= 1 for every conflict vertex l.
FeasibilityVerdict check_degree_condition(const Graph& conflict, const DemandVector& tau);
FeasibilityVerdict check_degree_condition(const ConflictGraph& conflict,
                                          const DemandVector& tau);

/// Delta(tau) <= 2/3 on the network graph.
FeasibilityVerdict check_shannon_condition(const Graph& g, const DemandVector& tau);

/// Delta(tau) <= 4/5 and every triangle of the network graph carries at
/// most 4/5. The bound reported is the larger of the two maxima.
FeasibilityVerdict check_d1_condition(const Graph& g, const DemandVector& tau);

}  // namespace qosadmit

#endif  // QOSADMIT_FEASIBILITY_HPP
