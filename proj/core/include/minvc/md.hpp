#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <vector>

#include "minvc/model.hpp"

namespace minvc {

/// Parameters of the molecular-dynamics preprocessor. Defaults are the
/// reference values used for the comparison experiments.
struct MdConfig {
  double alpha_f = 0.008;
  double rho1 = 4.0;
  double rho2 = 3.0;
  double beta_f = 0.12;
  double kappa1 = 0.005;
  double kappa2 = 1.0;
  int potential_power = 6;  // M in V(phi) = phi^M, even, >= 4
  long total_steps = 500'000;
  double avg_window = 0.1;  // trailing fraction of the run averaged
  std::uint64_t seed = 0;
  long dump_stride = 0;  // trajectory dump every k steps; 0 disables
};

// alpha(tau) = alpha_f (tau + rho1 (1 - tau) + rho2 tau (tau - 1)),
// beta(tau)  = beta_f  (tau + kappa1 (1 - tau) + kappa2 tau (tau - 1)).
double schedule_alpha(const MdConfig& cfg, double tau);
double schedule_beta(const MdConfig& cfg, double tau);

struct MdTrajectoryStats {
  std::vector<double> time_avg;  // trailing-window mean of each phi_i
  std::vector<double> final_phi;
  std::vector<double> final_p;
  std::vector<int> sorted_order;  // ascending |time_avg|, ties by index
};

struct MdDivergenceError : std::runtime_error {
  long step;
  explicit MdDivergenceError(long step_, const std::string& what)
      : std::runtime_error(what), step(step_) {}
};

/// Leapfrog (kick-drift-kick) integrator for the annealing Hamiltonian
///   H = alpha(tau) sum_i (p_i^2/2 + phi_i^M)
///     + beta(tau) (sum_{i<j} J_ij phi_i phi_j + sum_i h_i |phi_i| phi_i).
/// One step advances unit time; tau = step / total_steps parametrizes the
/// schedules. Schedule coefficients are sampled at each sub-step midpoint.
class MdIntegrator {
 public:
  MdIntegrator(const IsingModel& m, const MdConfig& cfg);

  int num_spins() const { return static_cast<int>(fields_.size()); }

  // One leapfrog step at step index k.
  void step(long k, std::vector<double>& phi, std::vector<double>& p) const;

  double hamiltonian(double tau, const std::vector<double>& phi,
                     const std::vector<double>& p) const;

  // Gradient pieces of the potential and interaction terms at phi; the kick
  // is p -= h (alpha * grad_v + beta * grad_j).
  void force_pieces(const std::vector<double>& phi, std::vector<double>& grad_v,
                    std::vector<double>& grad_j) const;

 private:
  MdConfig cfg_;
  std::vector<double> fields_;
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
  std::vector<std::pair<Edge, double>> coupling_list_;
};

// Integrates total_steps leapfrog steps from phi = 0 and p_i drawn
// uniformly from {+1, -1}, then reports trailing time averages and the
// sorted order by |time_avg|. Deterministic per (model, cfg). Throws
// MdDivergenceError if the state leaves |phi| <= 1e6 or becomes non-finite.
MdTrajectoryStats run_md(const IsingModel& m, const MdConfig& cfg,
                         std::ostream* trajectory_dump = nullptr);

/// Ambivalent/frozen partition at cut n: the n variables of smallest
/// |time_avg| stay free, the rest are clamped to sgn(time_avg) with
/// sgn(x) = +1 for x > 0 and -1 otherwise.
struct AmbivalentSplit {
  std::vector<int> ambivalent;  // in sorted order of |time_avg|
  std::map<int, int> frozen;    // index -> spin
};

AmbivalentSplit split_ambivalent(const MdTrajectoryStats& stats, int n);

}  // namespace minvc
