#include "qosadmit/generators.hpp"

#include <limits>
#include <string>
#include <vector>

#include "qosadmit/errors.hpp"

namespace qosadmit {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidArgument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<std::int64_t>(draw % span);
}

bool Rng::bernoulli(const Rational& p) {
  if (p.sign() < 0 || p > Rational(1)) throw InvalidArgument("probability outside [0,1]");
  return uniform(0, p.denominator_int() - 1) < p.numerator_int();
}

Rational Rng::unit_rational(std::int64_t max_denominator) {
  const std::int64_t q = uniform(1, max_denominator);
  return Rational(uniform(0, q), q);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(n, std::span<const Edge>(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw InvalidArgument("a path needs at least 1 node");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, std::span<const Edge>(edges));
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw InvalidArgument("a star needs at least 1 leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::build(leaves + 1, std::span<const Edge>(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw InvalidArgument("a complete graph needs at least 1 node");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::build(n, std::span<const Edge>(edges));
}

Graph random_graph(int n, const Rational& p, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("random graph needs at least 1 node");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return Graph::build(n, std::span<const Edge>(edges));
}

LineNetwork random_line_network(const LineNetworkOptions& options, std::uint64_t seed) {
  if (options.nodes < 1) throw InvalidArgument("line network needs at least 1 node");
  if (options.range.sign() <= 0) throw InvalidArgument("radius must be positive");
  Rng rng(seed);
  const Rational step = options.range / Rational(100);
  std::vector<Rational> gaps;
  for (int i = 0; i + 1 < options.nodes; ++i) gaps.push_back(step * Rational(rng.uniform(1, 100)));
  // Any three consecutive gaps must exceed the radius.
  for (std::size_t i = 0; i + 2 < gaps.size(); ++i) {
    const Rational span = gaps[i] + gaps[i + 1] + gaps[i + 2];
    if (span <= options.range) gaps[i + 2] = options.range + step - gaps[i] - gaps[i + 1];
  }
  std::vector<Rational> positions{Rational(0)};
  for (const auto& g : gaps) positions.push_back(positions.back() + g);

  std::vector<Transmission> transmissions;
  for (int i = 0; i < options.nodes; ++i) {
    std::vector<NodeId> reach;
    for (int j = i + 1; j < options.nodes && positions[j] - positions[i] <= options.range; ++j) {
      reach.push_back(j);
    }
    if (options.allow_multicast && reach.size() == 2 && rng.bernoulli(options.include_probability)) {
      transmissions.push_back(Transmission{i, reach});
    }
    for (NodeId j : reach) {
      if (rng.bernoulli(options.include_probability)) transmissions.push_back(Transmission{i, {j}});
    }
  }
  return validate_line_network(std::move(positions), options.range, std::move(transmissions));
}

LineNetwork claw_line_network() {
  std::vector<Rational> positions;
  for (const char* x : {"0", "0.3", "0.5", "1.4", "1.5", "1.6", "2.49", "2.51"}) {
    positions.push_back(Rational::parse(x));
  }
  std::vector<Transmission> transmissions{{2, {4}}, {0, {1}}, {3, {5}}, {6, {7}}};
  return validate_line_network(std::move(positions), Rational(1), std::move(transmissions));
}

DemandVector random_demands(std::size_t count, Rng& rng, std::int64_t max_denominator) {
  std::vector<Rational> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) values.push_back(rng.unit_rational(max_denominator));
  return DemandVector(std::move(values));
}

}  // namespace qosadmit
