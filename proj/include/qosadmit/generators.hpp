#ifndef QOSADMIT_GENERATORS_HPP
#define QOSADMIT_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "qosadmit/feasibility.hpp"
#include "qosadmit/graph.hpp"
#include "qosadmit/interference.hpp"
#include "qosadmit/rational.hpp"

namespace qosadmit {

/// Seeded generator with platform-independent draws (the standard
/// distributions are implementation-defined, the engine is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// True with probability p (p in [0,1]), decided exactly.
  bool bernoulli(const Rational& p);
  /// p/q with q uniform in [1, max_denominator] and p uniform in [0, q].
  Rational unit_rational(std::int64_t max_denominator);

 private:
  std::mt19937_64 engine_;
};

Graph cycle_graph(int n);
Graph path_graph(int n);
/// K_{1,leaves}, hub is node 0.
Graph star_graph(int leaves);
Graph complete_graph(int n);

/// G(n, p): each pair present independently with probability p.
Graph random_graph(int n, const Rational& p, std::uint64_t seed);

struct LineNetworkOptions {
  int nodes = 8;
  Rational range{1};
  /// Probability that each valid unicast is included.
  Rational include_probability{1, 2};
  /// When set, a transmitter that reaches two nodes to its right may send a
  /// two-receiver multicast instead.
  bool allow_multicast = false;
};

/// Random line network with gaps in hundredths of the radius, adjusted so
/// that x[i+3] - x[i] > range always holds, plus random valid eastward
/// transmissions.
LineNetwork random_line_network(const LineNetworkOptions& options, std::uint64_t seed);

/// Eight nodes at 0, 0.3, 0.5, 1.4, 1.5, 1.6, 2.49, 2.51 with radius 1 and
/// unicasts 2->4, 0->1, 3->5, 6->7 (in that order). The first transmission
/// conflicts with the other three, which are pairwise conflict-free.
LineNetwork claw_line_network();

/// Random demands p/q in [0,1] with denominators up to max_denominator.
DemandVector random_demands(std::size_t count, Rng& rng, std::int64_t max_denominator = 12);

}  // namespace qosadmit

#endif  // QOSADMIT_GENERATORS_HPP
