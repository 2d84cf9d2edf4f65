#include "minvc/md.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>

#include "minvc/rng.hpp"

namespace minvc {

namespace {

double int_pow(double x, int e) {
  double r = 1.0;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

void validate(const MdConfig& cfg) {
  if (cfg.potential_power < 4 || cfg.potential_power % 2 != 0)
    throw std::invalid_argument("potential power must be even and >= 4");
  if (cfg.total_steps < 1) throw std::invalid_argument("total_steps must be >= 1");
  if (!(cfg.avg_window > 0.0) || !(cfg.avg_window < 1.0))
    throw std::invalid_argument("avg_window must be in (0, 1)");
}

}  // namespace

double schedule_alpha(const MdConfig& cfg, double tau) {
  return cfg.alpha_f * (tau + cfg.rho1 * (1.0 - tau) + cfg.rho2 * tau * (tau - 1.0));
}

double schedule_beta(const MdConfig& cfg, double tau) {
  return cfg.beta_f * (tau + cfg.kappa1 * (1.0 - tau) + cfg.kappa2 * tau * (tau - 1.0));
}

MdIntegrator::MdIntegrator(const IsingModel& m, const MdConfig& cfg)
    : cfg_(cfg), fields_(m.fields()), adjacency_(m.adjacency()) {
  validate(cfg_);
  coupling_list_.reserve(m.couplings().size());
  for (const auto& entry : m.couplings()) coupling_list_.push_back(entry);
}

void MdIntegrator::force_pieces(const std::vector<double>& phi,
                                std::vector<double>& grad_v,
                                std::vector<double>& grad_j) const {
  const int n = num_spins();
  const int m_exp = cfg_.potential_power;
  grad_v.resize(n);
  grad_j.resize(n);
  for (int i = 0; i < n; ++i) {
    grad_v[i] = m_exp * int_pow(phi[i], m_exp - 1);
    double interaction = 2.0 * fields_[i] * std::abs(phi[i]);
    for (const auto& [j, coupling] : adjacency_[i]) interaction += coupling * phi[j];
    grad_j[i] = interaction;
  }
}

void MdIntegrator::step(long k, std::vector<double>& phi, std::vector<double>& p) const {
  const int n = num_spins();
  const double inv_steps = 1.0 / static_cast<double>(cfg_.total_steps);
  std::vector<double> grad_v, grad_j;

  auto kick = [&](double tau) {
    const double a = schedule_alpha(cfg_, tau);
    const double b = schedule_beta(cfg_, tau);
    for (int i = 0; i < n; ++i) p[i] -= 0.5 * (a * grad_v[i] + b * grad_j[i]);
  };

  force_pieces(phi, grad_v, grad_j);
  kick((k + 0.25) * inv_steps);
  const double a_mid = schedule_alpha(cfg_, (k + 0.5) * inv_steps);
  for (int i = 0; i < n; ++i) phi[i] += a_mid * p[i];
  force_pieces(phi, grad_v, grad_j);
  kick((k + 0.75) * inv_steps);
}

double MdIntegrator::hamiltonian(double tau, const std::vector<double>& phi,
                                 const std::vector<double>& p) const {
  const double a = schedule_alpha(cfg_, tau);
  const double b = schedule_beta(cfg_, tau);
  double kinetic = 0.0;
  for (int i = 0; i < num_spins(); ++i)
    kinetic += 0.5 * p[i] * p[i] + int_pow(phi[i], cfg_.potential_power);
  double interaction = 0.0;
  for (const auto& [edge, j] : coupling_list_)
    interaction += j * phi[edge.first] * phi[edge.second];
  for (int i = 0; i < num_spins(); ++i)
    interaction += fields_[i] * std::abs(phi[i]) * phi[i];
  return a * kinetic + b * interaction;
}

MdTrajectoryStats run_md(const IsingModel& m, const MdConfig& cfg,
                         std::ostream* trajectory_dump) {
  MdIntegrator integrator(m, cfg);
  const int n = m.num_spins();

  std::vector<double> phi(n, 0.0), p(n);
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < n; ++i) p[i] = (rng() & 1) ? 1.0 : -1.0;

  const long window_steps =
      std::clamp(std::lround(cfg.avg_window * static_cast<double>(cfg.total_steps)),
                 1l, cfg.total_steps);
  const long avg_start = cfg.total_steps - window_steps;

  std::vector<double> avg_sum(n, 0.0);
  std::vector<double> grad_v, grad_j;

  // Same kick/drift/kick arithmetic as MdIntegrator::step, but the second
  // force evaluation of one step is reused as the first of the next.
  const double inv_steps = 1.0 / static_cast<double>(cfg.total_steps);
  auto kick = [&](double tau) {
    const double a = schedule_alpha(cfg, tau);
    const double b = schedule_beta(cfg, tau);
    for (int i = 0; i < n; ++i) p[i] -= 0.5 * (a * grad_v[i] + b * grad_j[i]);
  };

  integrator.force_pieces(phi, grad_v, grad_j);
  for (long k = 0; k < cfg.total_steps; ++k) {
    kick((k + 0.25) * inv_steps);
    const double a_mid = schedule_alpha(cfg, (k + 0.5) * inv_steps);
    for (int i = 0; i < n; ++i) phi[i] += a_mid * p[i];
    integrator.force_pieces(phi, grad_v, grad_j);
    kick((k + 0.75) * inv_steps);

    for (int i = 0; i < n; ++i) {
      if (!std::isfinite(phi[i]) || std::abs(phi[i]) > 1e6)
        throw MdDivergenceError(k, "md state diverged at step " + std::to_string(k));
    }
    if (k >= avg_start) {
      for (int i = 0; i < n; ++i) avg_sum[i] += phi[i];
    }
    if (trajectory_dump && cfg.dump_stride > 0 && (k + 1) % cfg.dump_stride == 0) {
      for (int i = 0; i < n; ++i)
        *trajectory_dump << (k + 1) << ',' << i << ',' << phi[i] << '\n';
    }
  }

  MdTrajectoryStats stats;
  stats.time_avg.resize(n);
  for (int i = 0; i < n; ++i)
    stats.time_avg[i] = avg_sum[i] / static_cast<double>(window_steps);
  stats.final_phi = std::move(phi);
  stats.final_p = std::move(p);
  stats.sorted_order.resize(n);
  std::iota(stats.sorted_order.begin(), stats.sorted_order.end(), 0);
  std::sort(stats.sorted_order.begin(), stats.sorted_order.end(), [&](int a, int b) {
    double fa = std::abs(stats.time_avg[a]), fb = std::abs(stats.time_avg[b]);
    if (fa != fb) return fa < fb;
    return a < b;
  });
  return stats;
}

AmbivalentSplit split_ambivalent(const MdTrajectoryStats& stats, int n) {
  const int total = static_cast<int>(stats.time_avg.size());
  if (n < 0 || n > total) throw std::invalid_argument("ambivalent count out of range");
  AmbivalentSplit split;
  split.ambivalent.assign(stats.sorted_order.begin(), stats.sorted_order.begin() + n);
  for (int k = n; k < total; ++k) {
    int idx = stats.sorted_order[k];
    split.frozen[idx] = stats.time_avg[idx] > 0 ? 1 : -1;
  }
  return split;
}

}  // namespace minvc
