#include "minvc/md.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "minvc/rng.hpp"
#include "oracles.hpp"

using namespace minvc;

namespace {

// rho1 = 1, rho2 = 0 pins alpha(tau) = alpha_f; same for beta.
MdConfig constant_schedules(double alpha, double beta) {
  MdConfig cfg;
  cfg.alpha_f = alpha;
  cfg.rho1 = 1.0;
  cfg.rho2 = 0.0;
  cfg.beta_f = beta;
  cfg.kappa1 = 1.0;
  cfg.kappa2 = 0.0;
  return cfg;
}

IsingModel random_spin_glass(int n, std::uint64_t seed) {
  // J in [-1, 1], h in [-2, 2]
  std::mt19937_64 rng(seed);
  IsingModel m(n);
  for (int i = 0; i < n; ++i) m.add_field(i, 4 * canonical_unit(rng) - 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.add_coupling(i, j, 2 * canonical_unit(rng) - 1);
  return m;
}

}  // namespace

TEST(Schedules, ReferenceEndpoints) {
  MdConfig cfg;  // defaults: (0.008, 4, 3), (0.12, 0.005, 1)
  EXPECT_DOUBLE_EQ(schedule_alpha(cfg, 0.0), 0.032);
  EXPECT_DOUBLE_EQ(schedule_alpha(cfg, 1.0), 0.008);
  EXPECT_DOUBLE_EQ(schedule_beta(cfg, 0.0), 0.0006);
  EXPECT_DOUBLE_EQ(schedule_beta(cfg, 1.0), 0.12);
  // hand evaluation: 0.008 * (0.5 + 4*0.5 + 3*0.5*(-0.5)) = 0.014
  EXPECT_DOUBLE_EQ(schedule_alpha(cfg, 0.5), 0.014);
}

TEST(MdConfigValidation, RejectsBadParameters) {
  IsingModel m(1);
  MdConfig cfg;
  cfg.potential_power = 5;
  EXPECT_THROW(run_md(m, cfg), std::invalid_argument);
  cfg = MdConfig{};
  cfg.total_steps = 0;
  EXPECT_THROW(run_md(m, cfg), std::invalid_argument);
  cfg = MdConfig{};
  cfg.avg_window = 1.0;
  EXPECT_THROW(run_md(m, cfg), std::invalid_argument);
}

// Free particle in the symmetric phi^M well oscillates around zero.
TEST(RunMd, ZeroModelAveragesToZero) {
  IsingModel m(4);
  MdConfig cfg = constant_schedules(0.05, 0.0);
  cfg.total_steps = 40'000;
  cfg.avg_window = 0.9;
  cfg.seed = 5;
  MdTrajectoryStats stats = run_md(m, cfg);
  for (double avg : stats.time_avg) EXPECT_LT(std::abs(avg), 1e-2);
}

// Single spin with h = -1: the ground state of h*s is s = +1 and the
// interaction term -beta |phi| phi drives phi positive.
TEST(RunMd, SingleSpinFollowsTheField) {
  IsingModel m(1);
  m.add_field(0, -1.0);
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    MdConfig cfg;  // reference schedules
    cfg.total_steps = 20'000;
    cfg.seed = seed;
    MdTrajectoryStats stats = run_md(m, cfg);
    EXPECT_GT(stats.time_avg[0], 0.0) << "seed " << seed;
  }
}

TEST(RunMd, DeterministicPerSeed) {
  IsingModel m = random_spin_glass(8, 3);
  MdConfig cfg;
  cfg.total_steps = 5'000;
  cfg.seed = 9;
  MdTrajectoryStats a = run_md(m, cfg);
  MdTrajectoryStats b = run_md(m, cfg);
  EXPECT_EQ(a.time_avg, b.time_avg);
  EXPECT_EQ(a.final_phi, b.final_phi);
  EXPECT_EQ(a.sorted_order, b.sorted_order);
}

// The largest |time_avg| variables should already match an exact ground
// state on most seeds.
TEST(RunMd, FrozenSignsTrackGroundState) {
  IsingModel m = random_spin_glass(10, 12);
  const double ground = test::brute_force_ising_min(m);
  int successes = 0;
  const int n_seeds = 9;
  for (int seed = 0; seed < n_seeds; ++seed) {
    MdConfig cfg;
    cfg.total_steps = 50'000;
    cfg.seed = static_cast<std::uint64_t>(seed);
    MdTrajectoryStats stats = run_md(m, cfg);
    AmbivalentSplit split = split_ambivalent(stats, 5);
    // count frozen-sign agreement with some optimal completion: clamp the
    // frozen spins and compare the reachable optimum with the true one
    ReducedIsing reduced = reduce_with_fixed(m, split.frozen);
    const double clamped = test::brute_force_ising_min(reduced.model);
    // all five frozen correct iff clamping loses nothing; allow one slip
    // by checking against single-flip repairs
    if (clamped <= ground + 1e-9) {
      ++successes;
      continue;
    }
    bool one_off = false;
    for (const auto& [idx, spin] : split.frozen) {
      std::map<int, int> flipped = split.frozen;
      flipped[idx] = -spin;
      ReducedIsing alt = reduce_with_fixed(m, flipped);
      if (test::brute_force_ising_min(alt.model) <= ground + 1e-9) {
        one_off = true;
        break;
      }
    }
    if (one_off) ++successes;
  }
  EXPECT_GT(successes, n_seeds / 2);
}

TEST(SplitAmbivalent, SortAndCutSemantics) {
  MdTrajectoryStats stats;
  stats.time_avg = {0.9, 0.01, -0.5};
  stats.sorted_order = {1, 2, 0};
  AmbivalentSplit split = split_ambivalent(stats, 1);
  EXPECT_EQ(split.ambivalent, (std::vector<int>{1}));
  EXPECT_EQ(split.frozen.at(0), 1);
  EXPECT_EQ(split.frozen.at(2), -1);

  AmbivalentSplit none = split_ambivalent(stats, 0);
  EXPECT_TRUE(none.ambivalent.empty());
  EXPECT_EQ(none.frozen.size(), 3u);

  AmbivalentSplit all = split_ambivalent(stats, 3);
  EXPECT_EQ(all.ambivalent.size(), 3u);
  EXPECT_TRUE(all.frozen.empty());

  EXPECT_THROW(split_ambivalent(stats, 4), std::invalid_argument);
  // sgn(0) = -1
  MdTrajectoryStats zero;
  zero.time_avg = {0.0};
  zero.sorted_order = {0};
  EXPECT_EQ(split_ambivalent(zero, 0).frozen.at(0), -1);
}

TEST(SplitAmbivalent, NestingInN) {
  IsingModel m = random_spin_glass(12, 4);
  MdConfig cfg;
  cfg.total_steps = 2'000;
  cfg.seed = 1;
  MdTrajectoryStats stats = run_md(m, cfg);
  for (int n = 0; n < 12; ++n) {
    auto small = split_ambivalent(stats, n).ambivalent;
    auto large = split_ambivalent(stats, n + 1).ambivalent;
    EXPECT_TRUE(std::equal(small.begin(), small.end(), large.begin()));
  }
}

// Symplectic checks: constant-schedule leapfrog conserves H and reverses.
// Run at the gentle early-schedule operating point: the unit-time step is
// only accurate while the interaction term has not yet steepened the well.
TEST(Integrator, EnergyDriftBounded) {
  IsingModel m = random_spin_glass(10, 6);
  MdConfig cfg = constant_schedules(0.008, 0.0006);
  cfg.total_steps = 10'000;
  MdIntegrator integrator(m, cfg);
  std::vector<double> phi(10, 0.0), p(10);
  std::mt19937_64 rng(2);
  for (auto& v : p) v = (rng() & 1) ? 1.0 : -1.0;
  const double h0 = integrator.hamiltonian(0.0, phi, p);
  ASSERT_NE(h0, 0.0);
  double max_drift = 0.0;
  for (long k = 0; k < cfg.total_steps; ++k) {
    integrator.step(k, phi, p);
    max_drift = std::max(max_drift,
                         std::abs(integrator.hamiltonian(0.0, phi, p) - h0));
  }
  EXPECT_LT(max_drift / std::abs(h0), 1e-3);
}

TEST(Integrator, TimeReversal) {
  IsingModel m = random_spin_glass(10, 6);
  MdConfig cfg = constant_schedules(0.008, 0.0006);
  cfg.total_steps = 4'000;
  MdIntegrator integrator(m, cfg);
  std::vector<double> phi(10, 0.0), p(10);
  std::mt19937_64 rng(2);
  for (auto& v : p) v = (rng() & 1) ? 1.0 : -1.0;
  const std::vector<double> phi0 = phi;
  const long k_steps = 2'000;
  for (long k = 0; k < k_steps; ++k) integrator.step(k, phi, p);
  for (auto& v : p) v = -v;
  for (long k = 0; k < k_steps; ++k) integrator.step(k, phi, p);
  for (int i = 0; i < 10; ++i) EXPECT_NEAR(phi[i], phi0[i], 1e-6);
}

TEST(RunMd, DivergenceIsReportedWithStep) {
  IsingModel m(1);
  m.add_field(0, -1.0);
  MdConfig cfg = constant_schedules(1e3, 1e3);  // violent step, blows up
  cfg.total_steps = 1'000;
  try {
    run_md(m, cfg);
    FAIL() << "expected MdDivergenceError";
  } catch (const MdDivergenceError& e) {
    EXPECT_GE(e.step, 0);
    EXPECT_NE(std::string(e.what()).find("step"), std::string::npos);
  }
}
