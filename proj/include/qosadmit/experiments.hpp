#ifndef QOSADMIT_EXPERIMENTS_HPP
#define QOSADMIT_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qosadmit {

enum class Provenance { kPaper, kTrivial, kDerived };

const char* to_string(Provenance provenance);

/// Named experiment plus its parameters; empty lists / zero counts select
/// the defaults of that experiment.
struct ExperimentSpec {
  std::string name;
  std::uint64_t seed = 1;
  std::vector<int> n_values;
  std::vector<int> d_values;
  int count = 0;
};

/// Names accepted by run_experiment.
const std::vector<std::string>& experiment_names();

/// Throws InvalidArgument on unknown names or out-of-range parameters.
void validate(const ExperimentSpec& spec);

/// One compared quantity. `expected` may be a value ("5/2") or a bound
/// ("<= 3"); rationals are always exact.
struct Check {
  std::string instance;
  std::string quantity;
  std::string computed;
  std::string expected;
  Provenance provenance = Provenance::kDerived;
  bool pass = false;
};

struct Report {
  std::string experiment;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> summary;

  bool all_pass() const;
  /// Machine-readable document; identical for identical specs.
  std::string to_json() const;
  /// Human-readable table with a PASS/FAIL column.
  std::string to_table() const;
};

Report run_experiment(const ExperimentSpec& spec);

}  // namespace qosadmit

#endif  // QOSADMIT_EXPERIMENTS_HPP
