#include <doctest.h>

#include <json.hpp>

#include "qosadmit/errors.hpp"
#include "qosadmit/experiments.hpp"

using namespace qosadmit;

TEST_CASE("every named experiment passes with its defaults") {
  for (const auto& name : experiment_names()) {
    ExperimentSpec spec;
    spec.name = name;
    spec.count = 40;
    const Report report = run_experiment(spec);
    CHECK_MESSAGE(report.all_pass(), name);
    CHECK_FALSE(report.checks.empty());
  }
}

TEST_CASE("reports are seed-deterministic") {
  for (const auto& name : experiment_names()) {
    ExperimentSpec spec;
    spec.name = name;
    spec.seed = 42;
    spec.count = 30;
    CHECK(run_experiment(spec).to_json() == run_experiment(spec).to_json());
  }
  ExperimentSpec a{"oracle-crosscheck", 1, {}, {}, 30};
  ExperimentSpec b{"oracle-crosscheck", 2, {}, {}, 30};
  CHECK(run_experiment(a).to_json() != run_experiment(b).to_json());
}

TEST_CASE("reports carry exact values and provenance") {
  ExperimentSpec spec;
  spec.name = "odd-cycle-schedule";
  spec.n_values = {5, 7, 9};
  const Report report = run_experiment(spec);
  const auto doc = nlohmann::json::parse(report.to_json());
  CHECK(doc["experiment"] == "odd-cycle-schedule");
  std::vector<std::string> computed;
  for (const auto& check : doc["checks"]) {
    CHECK(check.contains("provenance"));
    if (check["quantity"] == "fractional chromatic index") computed.push_back(check["computed"]);
  }
  CHECK(computed == std::vector<std::string>{"5/2", "7/3", "9/4"});
  CHECK(report.to_table().find("PASS") != std::string::npos);

  spec.name = "bound-tightness";
  spec.d_values = {1, 2, 3};
  spec.n_values.clear();
  CHECK(run_experiment(spec).all_pass());
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate(ExperimentSpec{"nope", 1, {}, {}, 0}), InvalidArgument);
  CHECK_THROWS_AS(validate(ExperimentSpec{"odd-cycle-schedule", 1, {6}, {}, 0}), InvalidArgument);
  CHECK_THROWS_AS(validate(ExperimentSpec{"bound-tightness", 1, {}, {0}, 0}), InvalidArgument);
  CHECK_THROWS_AS(validate(ExperimentSpec{"sigma-line-sweep", 1, {}, {}, -3}), InvalidArgument);
  CHECK_THROWS_AS(run_experiment(ExperimentSpec{"nope", 1, {}, {}, 0}), InvalidArgument);
}
