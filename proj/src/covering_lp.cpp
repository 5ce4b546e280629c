#include "qosadmit/covering_lp.hpp"

#include <string>

#include "qosadmit/errors.hpp"

namespace qosadmit {

namespace {

class DualSimplex {
 public:
  DualSimplex(const std::vector<NodeSet>& columns, const std::vector<Rational>& demand)
      : rows_(static_cast<int>(demand.size())),
        structural_(static_cast<int>(columns.size())),
        width_(structural_ + rows_),
        table_(static_cast<std::size_t>(rows_) * width_),
        rhs_(rows_),
        reduced_(width_),
        basis_(rows_) {
    for (int j = 0; j < structural_; ++j) {
      for (NodeId i : columns[j]) {
        if (i < 0 || i >= rows_) {
          throw InvalidArgument("column entry " + std::to_string(i) + " outside the demand vector");
        }
        at(i, j) = Rational(-1);
      }
      reduced_[j] = Rational(1);
    }
    for (int i = 0; i < rows_; ++i) {
      at(i, structural_ + i) = Rational(1);
      rhs_[i] = -demand[i];
      basis_[i] = structural_ + i;
    }
  }

  void solve() {
    while (true) {
      int leave = -1;
      for (int i = 0; i < rows_; ++i) {
        if (rhs_[i].sign() < 0 && (leave < 0 || basis_[i] < basis_[leave])) leave = i;
      }
      if (leave < 0) return;
      int enter = -1;
      Rational best_ratio;
      for (int j = 0; j < width_; ++j) {
        const Rational& entry = at(leave, j);
        if (entry.sign() >= 0) continue;
        Rational ratio = reduced_[j] / -entry;
        if (enter < 0 || ratio < best_ratio) {
          enter = j;
          best_ratio = std::move(ratio);
        }
      }
      if (enter < 0) {
        throw InvalidArgument("covering LP infeasible: demand row " + std::to_string(leave) +
                              " is not covered by any column");
      }
      pivot(leave, enter);
    }
  }

  CoveringSolution solution() const {
    CoveringSolution out;
    out.weights.assign(structural_, Rational(0));
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) out.weights[basis_[i]] = rhs_[i];
    }
    for (const auto& w : out.weights) out.value += w;
    out.prices.reserve(rows_);
    for (int i = 0; i < rows_; ++i) out.prices.push_back(reduced_[structural_ + i]);
    return out;
  }

 private:
  Rational& at(int i, int j) { return table_[static_cast<std::size_t>(i) * width_ + j]; }
  const Rational& at(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * width_ + j];
  }

  void pivot(int r, int e) {
    const Rational inv = Rational(1) / at(r, e);
    for (int j = 0; j < width_; ++j) {
      if (at(r, j).sign() != 0) at(r, j) *= inv;
    }
    rhs_[r] *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, e).sign() == 0) continue;
      const Rational factor = at(i, e);
      for (int j = 0; j < width_; ++j) {
        if (at(r, j).sign() != 0) at(i, j) -= factor * at(r, j);
      }
      rhs_[i] -= factor * rhs_[r];
    }
    if (reduced_[e].sign() != 0) {
      const Rational factor = reduced_[e];
      for (int j = 0; j < width_; ++j) {
        if (at(r, j).sign() != 0) reduced_[j] -= factor * at(r, j);
      }
    }
    basis_[r] = e;
  }

  int rows_;
  int structural_;
  int width_;
  std::vector<Rational> table_;
  std::vector<Rational> rhs_;
  std::vector<Rational> reduced_;
  std::vector<int> basis_;
};

}  // namespace

CoveringSolution solve_covering_lp(const std::vector<NodeSet>& columns,
                                   const std::vector<Rational>& demand) {
  for (const auto& t : demand) {
    if (t.sign() < 0) throw InvalidArgument("negative demand");
  }
  DualSimplex simplex(columns, demand);
  simplex.solve();
  return simplex.solution();
}

bool certifies_optimum(const CoveringSolution& solution, const std::vector<NodeSet>& columns,
                       const std::vector<Rational>& demand) {
  if (solution.weights.size() != columns.size() || solution.prices.size() != demand.size()) {
    return false;
  }
  std::vector<Rational> covered(demand.size());
  Rational total;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (solution.weights[j].sign() < 0) return false;
    total += solution.weights[j];
    Rational price_sum;
    for (NodeId i : columns[j]) {
      covered[i] += solution.weights[j];
      price_sum += solution.prices[i];
    }
    if (price_sum > Rational(1)) return false;
  }
  Rational dual_value;
  for (std::size_t i = 0; i < demand.size(); ++i) {
    if (covered[i] < demand[i] || solution.prices[i].sign() < 0) return false;
    dual_value += demand[i] * solution.prices[i];
  }
  return total == solution.value && dual_value == solution.value;
}

}  // namespace qosadmit
