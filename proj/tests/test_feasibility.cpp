#include <doctest.h>

#include "instances.hpp"
#include "oracles.hpp"
#include "qosadmit/errors.hpp"
#include "qosadmit/feasibility.hpp"
#include "qosadmit/generators.hpp"

using namespace qosadmit;

namespace {

DemandVector all(const Graph& g, Rational value) { return DemandVector::uniform(g.edge_count(), value); }

Limits wide() {
  Limits limits;
  limits.max_enumeration_nodes = 32;
  return limits;
}

}  // namespace

TEST_CASE("demand vectors") {
  CHECK_THROWS_AS(DemandVector({Rational(-1)}), InvalidArgument);
  const auto rates = DemandVector::from_rates({Rational(1), Rational(3)}, {Rational(2), Rational(4)});
  CHECK(rates.values() == std::vector<Rational>{Rational(1, 2), Rational(3, 4)});
  CHECK_THROWS_AS(DemandVector::from_rates({Rational(1)}, {Rational(0)}), InvalidArgument);
  CHECK_THROWS_AS(DemandVector::from_rates({Rational(1)}, {}), InvalidArgument);
  CHECK(rates.scaled(Rational(2)).values() == std::vector<Rational>{Rational(1), Rational(3, 2)});
  CHECK(rates.restricted({1}).values() == std::vector<Rational>{Rational(3, 4)});
  CHECK(rates.max() == Rational(3, 4));
  CHECK(DemandVector().max() == Rational(0));
  CHECK_THROWS_AS(max_demand_degree(cycle_graph(3), DemandVector::uniform(2, Rational(1))),
                  InvalidArgument);
}

TEST_CASE("demand degree") {
  CHECK(max_demand_degree(cycle_graph(3), all(cycle_graph(3), Rational(1, 3))).value == Rational(2, 3));
  const Graph star = star_graph(3);
  const auto top = max_demand_degree(star, DemandVector({Rational(1, 2), Rational(1, 4), Rational(1, 8)}));
  CHECK(top.value == Rational(7, 8));
  CHECK(top.node == 0);
  CHECK(demand_degree(star, DemandVector({Rational(1, 2), Rational(1, 4), Rational(1, 8)}), 2) ==
        Rational(1, 4));
}

TEST_CASE("density") {
  CHECK(density(cycle_graph(5), all(cycle_graph(5), Rational(1))).value == Rational(5, 2));
  CHECK(density(cycle_graph(5), all(cycle_graph(5), Rational(1))).witness == NodeSet{0, 1, 2, 3, 4});
  CHECK(density(cycle_graph(3), all(cycle_graph(3), Rational(1, 3))).value == Rational(1));
  CHECK(density(path_graph(2), all(path_graph(2), Rational(1))).value == Rational(0));
  CHECK(density(path_graph(2), all(path_graph(2), Rational(1))).witness.empty());
  Limits tight;
  tight.max_density_nodes = 4;
  CHECK_THROWS_AS(density(cycle_graph(5), all(cycle_graph(5), Rational(1)), tight), CapExceeded);
}

TEST_CASE("fractional chromatic index examples") {
  for (int n : {5, 7, 9, 11}) {
    CHECK(fractional_chromatic_index(cycle_graph(n), all(cycle_graph(n), Rational(1))) ==
          Rational(2 * n, n - 1));
  }
  CHECK(fractional_chromatic_index(cycle_graph(4), all(cycle_graph(4), Rational(1, 2))) == Rational(1));
  CHECK(fractional_chromatic_index(cycle_graph(5), all(cycle_graph(5), Rational(2, 5))) == Rational(1));
  CHECK(fractional_chromatic_index(star_graph(3), all(star_graph(3), Rational(1))) == Rational(3));
  CHECK(fractional_chromatic_index(complete_graph(4), all(complete_graph(4), Rational(1))) == Rational(3));
  CHECK(fractional_chromatic_index(Graph::build(3, std::span<const Edge>()), DemandVector()) == Rational(0));
}

TEST_CASE("LP fractional chromatic number") {
  const auto k3 = fractional_chromatic_number_lp(complete_graph(3), DemandVector::uniform(3, Rational(1)));
  CHECK(k3.value == Rational(3));
  const auto c5 = fractional_chromatic_number_lp(cycle_graph(5), DemandVector::uniform(5, Rational(1)));
  CHECK(c5.value == Rational(5, 2));
  CHECK(oracle::lp_certificate_holds(cycle_graph(5), std::vector<Rational>(5, Rational(1)), c5.value,
                                     c5.column_weights, c5.prices));
  const Graph empty = Graph::build(4, std::span<const Edge>());
  const DemandVector tau({Rational(1, 3), Rational(3, 4), Rational(0), Rational(1, 2)});
  CHECK(fractional_chromatic_number_lp(empty, tau).value == Rational(3, 4));
  CHECK(fractional_chromatic_number_lp(Graph(), DemandVector()).value == Rational(0));
}

TEST_CASE("clique bound and imperfection ratio") {
  const auto k3 = clique_bound(complete_graph(3), DemandVector({Rational(1), Rational(1, 2), Rational(1, 3)}));
  CHECK(k3.value == Rational(11, 6));
  CHECK(k3.clique == NodeSet{0, 1, 2});
  CHECK(clique_bound(cycle_graph(5), DemandVector::uniform(5, Rational(1))).value == Rational(2));

  CHECK(imperfection_ratio(primary_conflict_graph(cycle_graph(5))) == Rational(5, 4));
  CHECK(imperfection_ratio(primary_conflict_graph(cycle_graph(7))) == Rational(7, 6));
  CHECK(imperfection_ratio(primary_conflict_graph(cycle_graph(6))) == Rational(1));
  CHECK(imperfection_ratio(primary_conflict_graph(path_graph(5))) == Rational(1));
  CHECK_THROWS_AS(imperfection_ratio(protocol_conflict_graph(claw_line_network())), InvalidArgument);
}

TEST_CASE("sufficient conditions on the worked examples") {
  const Graph c3 = cycle_graph(3);
  const auto shannon = check_shannon_condition(c3, all(c3, Rational(1, 3)));
  CHECK(shannon.accepted);
  CHECK(shannon.bound_value == Rational(2, 3));

  const Graph c4 = cycle_graph(4);
  const auto d1_c4 = check_d1_condition(c4, all(c4, Rational(1, 2)));
  CHECK_FALSE(d1_c4.accepted);
  CHECK(d1_c4.bound_value == Rational(1));
  CHECK(fractional_chromatic_index(c4, all(c4, Rational(1, 2))) == Rational(1));

  const Graph c5 = cycle_graph(5);
  const auto d1_c5 = check_d1_condition(c5, all(c5, Rational(2, 5)));
  CHECK(d1_c5.accepted);
  CHECK(d1_c5.bound_value == Rational(4, 5));

  const auto d1_tri = check_d1_condition(c3, all(c3, Rational(3, 10)));
  CHECK_FALSE(d1_tri.accepted);
  CHECK(d1_tri.witness_kind == FeasibilityVerdict::Witness::kTriangle);
  CHECK(d1_tri.witness == NodeSet{0, 1, 2});

  const Graph p4 = path_graph(4);
  const DemandVector spike({Rational(1), Rational(0), Rational(0)});
  CHECK_FALSE(check_shannon_condition(p4, spike).accepted);
  CHECK(fractional_chromatic_index(p4, spike) == Rational(1));

  const ConflictGraph star{star_graph(3), ConflictGraph::Source::kLinks, {}, {}};
  const DemandVector leaves({Rational(0), Rational(1), Rational(1), Rational(1)});
  const auto row = check_row_constraints(star, leaves, Rational(1));
  CHECK(row.bound_value == Rational(3));
  CHECK(row.witness == NodeSet{0});
  CHECK_FALSE(row.accepted);
  CHECK(fractional_chromatic_number_lp(star, leaves).value == Rational(1));

  const auto degree = check_degree_condition(complete_graph(3), DemandVector::uniform(3, Rational(1, 3)));
  CHECK(degree.accepted);
  CHECK(degree.bound_value == Rational(1));
  CHECK_FALSE(check_degree_condition(complete_graph(3), DemandVector::uniform(3, Rational(2, 5))).accepted);
}

TEST_CASE("Edmonds formula matches the LP and the brute-force density") {
  Rng rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = instances::random_small_graph(rng, 2, 7);
    const DemandVector tau = random_demands(g.edge_count(), rng);
    const Rational edmonds = fractional_chromatic_index(g, tau);
    CHECK(edmonds == oracle::fractional_chromatic_index(g, tau.values()));
    CHECK(density(g, tau).value == oracle::odd_density(g, tau.values()));
    const ConflictGraph cg = primary_conflict_graph(g);
    const LpResult lp = fractional_chromatic_number_lp(cg, tau, wide());
    CHECK(lp.value == edmonds);
    if (g.edge_count() <= 16) {
      CHECK(oracle::lp_certificate_holds(cg.graph, tau.values(), lp.value, lp.column_weights, lp.prices));
    }
  }
}

TEST_CASE("properties of the LP value on random conflict graphs") {
  Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = instances::random_small_graph(rng, 1, 9);
    const DemandVector tau = random_demands(g.node_count(), rng);
    const Rational value = fractional_chromatic_number_lp(g, tau).value;
    const Rational clique = clique_bound(g, tau).value;
    const auto row = check_row_constraints(g, tau, Rational(1));
    CHECK(clique <= value);
    CHECK(value <= row.bound_value);
    const int sigma = induced_star_number(g).size;
    if (sigma == 0) CHECK(row.bound_value == value);
    else CHECK(row.bound_value <= Rational(sigma) * value);
    CHECK(fractional_chromatic_number_lp(g, tau.scaled(Rational(3, 2))).value == value * Rational(3, 2));
    if (check_degree_condition(g, tau).accepted) CHECK(value <= Rational(1));
    if (row.accepted) CHECK(value <= Rational(1));
  }
}

TEST_CASE("sufficient edge conditions are sound") {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = instances::random_small_graph(rng, 2, 8);
    const DemandVector tau = random_demands(g.edge_count(), rng, 6).scaled(Rational(1, 2));
    const Rational exact = fractional_chromatic_index(g, tau);
    CHECK(max_demand_degree(g, tau).value <= exact);
    CHECK(exact <= Rational(3, 2) * max_demand_degree(g, tau).value);
    if (check_shannon_condition(g, tau).accepted) CHECK(exact <= Rational(1));
    if (check_d1_condition(g, tau).accepted) CHECK(exact <= Rational(1));
  }
}
