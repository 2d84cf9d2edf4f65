#include "minvc/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "minvc/rng.hpp"

namespace minvc {

std::pair<double, double> default_beta_range(const IsingModel& m) {
  // Largest possible single-flip energy change.
  std::vector<double> bound(m.num_spins(), 0.0);
  for (int i = 0; i < m.num_spins(); ++i) bound[i] = std::abs(m.fields()[i]);
  for (const auto& [edge, j] : m.couplings()) {
    bound[edge.first] += std::abs(j);
    bound[edge.second] += std::abs(j);
  }
  double max_delta = 0.0;
  for (double b : bound) max_delta = std::max(max_delta, 2.0 * b);
  const double beta_max = std::log(1e4);  // unit-cost move acceptance ~1e-4
  double beta_min = max_delta > 0 ? -std::log(0.99) / max_delta : beta_max / 100;
  if (beta_min >= beta_max) beta_min = beta_max / 100;
  return {beta_min, beta_max};
}

void SampleSet::insert(SpinConfig spins, double energy) {
  for (auto& s : samples_) {
    if (s.spins == spins) {
      ++s.multiplicity;
      return;
    }
  }
  samples_.push_back({std::move(spins), energy, 1});
}

void SampleSet::finalize() {
  // energy ties resolve toward +1-rich configurations, so degenerate
  // penalty models (cover vs. cost-neutral violation at lambda = 1) settle
  // on the cover side deterministically
  std::sort(samples_.begin(), samples_.end(), [](const Sample& a, const Sample& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.spins > b.spins;
  });
}

const Sample& SampleSet::best() const {
  if (samples_.empty()) throw std::logic_error("empty sample set");
  return samples_.front();
}

SampleSet solve_sa(const IsingModel& m, const SaConfig& cfg) {
  if (cfg.num_reads < 1) throw std::invalid_argument("num_reads must be >= 1");
  if (cfg.sweeps < 1) throw std::invalid_argument("sweeps must be >= 1");

  const int n = m.num_spins();
  SampleSet result;
  if (n == 0) {
    result.insert({}, m.offset());
    result.finalize();
    return result;
  }

  auto [beta_lo, beta_hi] = default_beta_range(m);
  if (cfg.beta_min) beta_lo = *cfg.beta_min;
  if (cfg.beta_max) beta_hi = *cfg.beta_max;
  if (!(beta_lo > 0) || !(beta_lo < beta_hi))
    throw std::invalid_argument("need 0 < beta_min < beta_max");

  std::vector<double> betas(cfg.sweeps);
  const double denom = std::max(1, cfg.sweeps - 1);
  for (int t = 0; t < cfg.sweeps; ++t) {
    double frac = t / denom;
    betas[t] = cfg.schedule == BetaSchedule::geometric
                   ? beta_lo * std::pow(beta_hi / beta_lo, frac)
                   : beta_lo + (beta_hi - beta_lo) * frac;
  }

  const auto adj = m.adjacency();
  const auto& h = m.fields();

  for (int read = 0; read < cfg.num_reads; ++read) {
    std::mt19937_64 rng(mix_seed({cfg.seed, static_cast<std::uint64_t>(read)}));
    SpinConfig s(n);
    for (int i = 0; i < n; ++i) s[i] = (rng() & 1) ? 1 : -1;
    double energy = m.energy(s);
    for (int t = 0; t < cfg.sweeps; ++t) {
      const double beta = betas[t];
      for (int i = 0; i < n; ++i) {
        double local = h[i];
        for (const auto& [j, coupling] : adj[i]) local += coupling * s[j];
        const double delta = -2.0 * s[i] * local;
        if (delta <= 0 || canonical_unit(rng) < std::exp(-beta * delta)) {
          s[i] = -s[i];
          energy += delta;
        }
      }
    }
    result.insert(std::move(s), energy);
  }
  result.finalize();
  return result;
}

}  // namespace minvc
