#ifndef QOSADMIT_COVERING_LP_HPP
#define QOSADMIT_COVERING_LP_HPP

#include <vector>

#include "qosadmit/graph.hpp"
#include "qosadmit/rational.hpp"

namespace qosadmit {

/// Optimal solution of  min sum(x)  s.t.  sum_{S ∋ i} x_S >= demand_i, x >= 0
/// over a fixed family of columns S, with a primal and a dual certificate.
struct CoveringSolution {
  Rational value;
  /// One weight per input column.
  std::vector<Rational> weights;
  /// Dual prices y >= 0 with sum_{i in S} y_i <= 1 for every column S and
  /// sum_i demand_i * y_i == value.
  std::vector<Rational> prices;
};

/// Exact dual simplex on the covering LP, started from the all-surplus
/// basis (dual feasible since every column costs 1). Leaving rows and
/// entering columns are picked by Bland's smallest-index rule, so degenerate
/// pivots cannot cycle. Every row with positive demand must be covered by
/// some column, otherwise InvalidArgument is thrown.
CoveringSolution solve_covering_lp(const std::vector<NodeSet>& columns,
                                   const std::vector<Rational>& demand);

/// Exact check of both certificates; returns false if any constraint fails.
bool certifies_optimum(const CoveringSolution& solution, const std::vector<NodeSet>& columns,
                       const std::vector<Rational>& demand);

}  // namespace qosadmit

#endif  // QOSADMIT_COVERING_LP_HPP
