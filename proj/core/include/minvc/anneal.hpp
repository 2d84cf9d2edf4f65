#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minvc/model.hpp"

namespace minvc {

enum class BetaSchedule { geometric, linear };

struct SaConfig {
  int num_reads = 100;
  int sweeps = 1000;
  // Unset bounds are derived from the model: beta_min so the worst-case
  // move starts near acceptance 0.99, beta_max so a unit-cost move ends
  // near acceptance 1e-4.
  std::optional<double> beta_min;
  std::optional<double> beta_max;
  BetaSchedule schedule = BetaSchedule::geometric;
  std::uint64_t seed = 0;
};

std::pair<double, double> default_beta_range(const IsingModel& m);

struct Sample {
  SpinConfig spins;
  double energy = 0.0;
  int multiplicity = 1;
};

/// Read results aggregated by configuration, sorted by (energy, spins).
class SampleSet {
 public:
  void insert(SpinConfig spins, double energy);
  void finalize();  // sorts and seals; insert() must not follow

  const std::vector<Sample>& samples() const { return samples_; }
  const Sample& best() const;
  bool empty() const { return samples_.empty(); }

 private:
  std::vector<Sample> samples_;
};

// Metropolis single-spin-flip annealing: per read, random +-1 start and
// `sweeps` passes over a fixed scan order with the configured inverse
// temperature schedule. Read k uses a generator derived from (seed, k), so
// results do not depend on scheduling. Deterministic per config.
SampleSet solve_sa(const IsingModel& m, const SaConfig& cfg);

/// Slot for the re-optimization backend of the hybrid pipelines. Shipped
/// implementation is simulated annealing; hardware annealers would plug in
/// here.
class SubproblemSolver {
 public:
  virtual ~SubproblemSolver() = default;
  virtual SampleSet solve(const IsingModel& m) const = 0;
  virtual std::string name() const = 0;
};

class SaSolver final : public SubproblemSolver {
 public:
  explicit SaSolver(SaConfig cfg) : cfg_(cfg) {}

  SampleSet solve(const IsingModel& m) const override { return solve_sa(m, cfg_); }
  std::string name() const override { return "sa"; }
  const SaConfig& config() const { return cfg_; }

 private:
  SaConfig cfg_;
};

}  // namespace minvc
