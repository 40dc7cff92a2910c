#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "rtrade/deployment.hpp"
#include "rtrade/model.hpp"
#include "rtrade/strategy.hpp"

using namespace rtrade;

namespace {

double rel_err(double value, double expected) {
  return std::abs(value - expected) / std::abs(expected);
}

// Single-cell deployment with users pinned at the given distances (along the
// +y axis, which passes through a hexagon vertex), for surgical checks.
Deployment pinned_users(const std::vector<double>& dists) {
  Deployment dep;
  dep.config = DeploymentConfig{};
  dep.config.cell_count = 1;
  dep.config.user_count = dists.size();
  dep.cells = generate_hex_grid(1, dep.config.cell_radius);
  for (double d : dists) dep.users.push_back({0, 0.0, d, d});
  return dep;
}

}  // namespace

TEST_CASE("step levels per ring") {
  const SystemParams p;
  const DeploymentConfig cfg;

  const StepStrategy one =
      step_levels(ResourceKind::kBandwidth, 1, cfg, p);
  REQUIRE(one.levels.size() == 1);
  // Single ring: level is the cell-edge optimum.
  CHECK(rel_err(one.levels[0], 0.4048053597664054) < 1e-11);
  CHECK(one.ring_width == 1000.0);

  const StepStrategy two =
      step_levels(ResourceKind::kBandwidth, 2, cfg, p);
  REQUIRE(two.levels.size() == 2);
  CHECK(rel_err(two.levels[0], 0.2331399881118945) < 1e-11);  // 500 m edge
  CHECK(rel_err(two.levels[1], 0.4048053597664054) < 1e-11);  // 1 km edge
  CHECK(two.levels[0] < two.levels[1]);
  CHECK(two.ring_width == 500.0);

  const StepStrategy dl = step_levels(ResourceKind::kDelay, 2, cfg, p);
  CHECK(rel_err(dl.levels[0], 0.1845922090800358) < 1e-11);
  CHECK(rel_err(dl.levels[1], 0.29657688487098444) < 1e-11);

  const StepStrategy many =
      step_levels(ResourceKind::kDelay, 10, cfg, p);
  for (std::size_t i = 1; i < many.levels.size(); ++i)
    CHECK(many.levels[i] > many.levels[i - 1]);

  const StepStrategy cont =
      step_levels(ResourceKind::kBandwidth, StepStrategy::kContinuous, cfg, p);
  CHECK(cont.levels.empty());
  CHECK(cont.n_steps == StepStrategy::kContinuous);

  CHECK_THROWS_AS(step_levels(ResourceKind::kBandwidth, 0, cfg, p),
                  std::domain_error);
}

TEST_CASE("ring assignment boundaries") {
  CHECK(assign_step(250.0, 2, 1000.0) == 1);
  CHECK(assign_step(500.0, 2, 1000.0) == 1);   // boundary belongs below
  CHECK(assign_step(500.0001, 2, 1000.0) == 2);
  CHECK(assign_step(1000.0, 2, 1000.0) == 2);
  CHECK(assign_step(1000.0, 5, 1000.0) == 5);
  CHECK(assign_step(1e-9, 7, 1000.0) == 1);
  CHECK(assign_step(199.9, 5, 1000.0) == 1);
  CHECK(assign_step(200.1, 5, 1000.0) == 2);
  CHECK_THROWS_AS(assign_step(0.0, 2, 1000.0), std::domain_error);
  CHECK_THROWS_AS(assign_step(1000.1, 2, 1000.0), std::domain_error);
  CHECK_THROWS_AS(assign_step(100.0, 0, 1000.0), std::domain_error);
}

TEST_CASE("quantized allocation is costed on the ring curve") {
  const SystemParams p;
  const Deployment dep = pinned_users({250.0, 750.0});
  const StepStrategy strat =
      step_levels(ResourceKind::kBandwidth, 2, dep.config, p);
  AvailabilityCaps caps;
  caps.available_bandwidth = 1.0;

  const Allocation a = adaptive_bandwidth(dep, caps, strat, p);
  REQUIRE(a.chosen.size() == 2);
  CHECK(a.chosen[0] == strat.levels[0]);
  CHECK(a.chosen[1] == strat.levels[1]);
  CHECK_FALSE(a.capped[0]);
  CHECK_FALSE(a.capped[1]);

  // Each user pays the energy of its ring's outer-edge curve, not of its own
  // exact position: ring 1 is the 500 m curve, ring 2 the 1 km curve.
  const double g500 = channel_gain(500.0, p);
  const double g1000 = channel_gain(1000.0, p);
  CHECK(a.energy[0] ==
        resource_curve_energy(ResourceKind::kBandwidth, strat.levels[0], g500,
                              p));
  CHECK(a.energy[1] ==
        resource_curve_energy(ResourceKind::kBandwidth, strat.levels[1],
                              g1000, p));
  CHECK(a.energy[0] !=
        resource_curve_energy(ResourceKind::kBandwidth, strat.levels[0],
                              channel_gain(250.0, p), p));
}

TEST_CASE("cap clips the level and marks the user") {
  const SystemParams p;
  const Deployment dep = pinned_users({250.0, 750.0});
  const StepStrategy strat =
      step_levels(ResourceKind::kBandwidth, 2, dep.config, p);
  AvailabilityCaps caps;
  caps.available_bandwidth = 0.3;  // between the two levels

  const Allocation a = adaptive_bandwidth(dep, caps, strat, p);
  CHECK(a.chosen[0] == strat.levels[0]);  // 0.233 < 0.3: untouched
  CHECK_FALSE(a.capped[0]);
  CHECK(a.chosen[1] == 0.3);  // 0.405 clipped
  CHECK(a.capped[1]);

  // Clipping costs energy: the capped user pays more than at its level.
  const double g1000 = channel_gain(1000.0, p);
  CHECK(a.energy[1] > resource_curve_energy(ResourceKind::kBandwidth,
                                            strat.levels[1], g1000, p));

  // Tie: a cap exactly at the level leaves the user uncapped.
  caps.available_bandwidth = strat.levels[1];
  const Allocation tie = adaptive_bandwidth(dep, caps, strat, p);
  CHECK(tie.chosen[1] == strat.levels[1]);
  CHECK_FALSE(tie.capped[1]);
}

TEST_CASE("cap dominance holds for every user") {
  const SystemParams p;
  DeploymentConfig cfg;
  cfg.user_count = 200;
  const Deployment dep = place_users(cfg);
  const StepStrategy strat =
      step_levels(ResourceKind::kDelay, 5, cfg, p);
  for (double cap : {0.05, 0.15, 0.25, 1.0}) {
    AvailabilityCaps caps;
    caps.acceptable_delay = cap;
    const Allocation a = adaptive_delay(dep, caps, strat, p);
    for (std::size_t i = 0; i < a.chosen.size(); ++i) {
      const std::size_t ring =
          assign_step(dep.users[i].distance, 5, cfg.cell_radius);
      CHECK(a.chosen[i] <= cap);
      CHECK(a.chosen[i] <= strat.levels[ring - 1]);
    }
  }
}

TEST_CASE("single ring serves everyone identically") {
  const SystemParams p;
  DeploymentConfig cfg;
  cfg.user_count = 50;
  const Deployment dep = place_users(cfg);
  const StepStrategy strat = step_levels(ResourceKind::kDelay, 1, cfg, p);
  AvailabilityCaps caps;
  caps.acceptable_delay = 1.0;
  const Allocation a = adaptive_delay(dep, caps, strat, p);
  for (std::size_t i = 1; i < a.chosen.size(); ++i) {
    CHECK(a.chosen[i] == a.chosen[0]);
    CHECK(a.energy[i] == a.energy[0]);
  }
  // Summing 50 identical terms rounds at the last ulp; equal up to that.
  CHECK(mean_energy(a) == doctest::Approx(a.energy[0]).epsilon(1e-14));
}

TEST_CASE("continuous strategy gives each user its own optimum") {
  const SystemParams p;
  const Deployment dep = pinned_users({500.0, 1000.0});
  const StepStrategy cont = step_levels(
      ResourceKind::kBandwidth, StepStrategy::kContinuous, dep.config, p);
  AvailabilityCaps caps;
  caps.available_bandwidth = 1.0;
  const Allocation a = adaptive_bandwidth(dep, caps, cont, p);
  CHECK(rel_err(a.chosen[0], 0.2331399881118945) < 1e-11);
  CHECK(rel_err(a.chosen[1], 0.4048053597664054) < 1e-11);
  CHECK(a.energy[0] ==
        resource_curve_energy(ResourceKind::kBandwidth, a.chosen[0],
                              channel_gain(500.0, p), p));

  // Low cap clips the continuous optimum too.
  caps.available_bandwidth = 0.1;
  const Allocation clipped = adaptive_bandwidth(dep, caps, cont, p);
  CHECK(clipped.chosen[0] == 0.1);
  CHECK(clipped.chosen[1] == 0.1);
  CHECK(clipped.capped[0]);
}

TEST_CASE("mean energy shrinks as the cap loosens") {
  const SystemParams p;
  DeploymentConfig cfg;
  cfg.user_count = 100;
  const Deployment dep = place_users(cfg);
  for (std::size_t n : {std::size_t{2}, std::size_t{5}}) {
    const StepStrategy strat =
        step_levels(ResourceKind::kBandwidth, n, cfg, p);
    double prev = 1e18;
    for (int k = 0; k < 30; ++k) {
      AvailabilityCaps caps;
      caps.available_bandwidth = 0.02 * std::pow(10.0, k / 20.0);
      const double m =
          mean_energy(adaptive_bandwidth(dep, caps, strat, p));
      CHECK(m <= prev);
      prev = m;
    }
  }
}

TEST_CASE("continuous mean bounds every quantized mean") {
  const SystemParams p;
  DeploymentConfig cfg;
  cfg.user_count = 100;
  const Deployment dep = place_users(cfg);
  const StepStrategy cont = step_levels(
      ResourceKind::kDelay, StepStrategy::kContinuous, cfg, p);
  for (std::size_t n : {std::size_t{2}, std::size_t{4}, std::size_t{10}}) {
    const StepStrategy strat = step_levels(ResourceKind::kDelay, n, cfg, p);
    for (double cap : {0.05, 0.2, 1.0}) {
      AvailabilityCaps caps;
      caps.acceptable_delay = cap;
      CHECK(mean_energy(adaptive_delay(dep, caps, cont, p)) <=
            mean_energy(adaptive_delay(dep, caps, strat, p)));
    }
  }
}

TEST_CASE("allocation rejects mismatched inputs") {
  const SystemParams p;
  const Deployment dep = pinned_users({400.0});
  const StepStrategy w2 =
      step_levels(ResourceKind::kBandwidth, 2, dep.config, p);
  AvailabilityCaps caps;
  CHECK_THROWS_AS(adaptive_delay(dep, caps, w2, p), std::domain_error);
  caps.available_bandwidth = 0.0;
  CHECK_THROWS_AS(adaptive_bandwidth(dep, caps, w2, p), std::domain_error);

  Deployment empty;
  empty.config = dep.config;
  empty.cells = dep.cells;
  caps.available_bandwidth = 1.0;
  CHECK_THROWS_AS(adaptive_bandwidth(empty, caps, w2, p), std::domain_error);

  Allocation none;
  CHECK_THROWS_AS(mean_energy(none), std::domain_error);
}

TEST_CASE("mean energy is the plain average") {
  Allocation a;
  a.energy = {2.0e-6, 4.0e-6};
  CHECK(mean_energy(a) == 3.0e-6);
  a.energy = {5.5e-7};
  CHECK(mean_energy(a) == 5.5e-7);
}
