#include "oracles.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace minvc::test {

int brute_force_min_cover(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("too large for brute force");
  const auto& edges = g.edges();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    bool feasible = true;
    for (const auto& [u, v] : edges) {
      if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
        feasible = false;
        break;
      }
    }
    if (feasible) best = size;
  }
  return best;
}

namespace {

void lp_recurse(const std::vector<std::vector<int>>& adj, std::vector<int>& doubled,
                int v, int partial, int& best) {
  const int n = static_cast<int>(doubled.size());
  if (partial >= best) return;
  if (v == n) {
    best = partial;
    return;
  }
  for (int value : {0, 1, 2}) {
    bool ok = true;
    for (int w : adj[v]) {
      if (w < v && doubled[w] + value < 2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    doubled[v] = value;
    lp_recurse(adj, doubled, v + 1, partial + value, best);
  }
  doubled[v] = -1;
}

}  // namespace

int brute_force_lp_doubled(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 16) throw std::invalid_argument("too large for brute force");
  auto adj = g.adjacency();
  std::vector<int> doubled(n, -1);
  int best = 2 * n;
  lp_recurse(adj, doubled, 0, 0, best);
  return best;
}

double brute_force_ising_min(const IsingModel& m) {
  const int n = m.num_spins();
  if (n > 24) throw std::invalid_argument("too large for brute force");
  double best = std::numeric_limits<double>::infinity();
  SpinConfig s(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (int i = 0; i < n; ++i) s[i] = ((mask >> i) & 1) ? 1 : -1;
    best = std::min(best, m.energy(s));
  }
  if (n == 0) best = m.offset();
  return best;
}

double brute_force_qubo_min(const QuboModel& q) {
  const int n = q.num_vars();
  if (n > 24) throw std::invalid_argument("too large for brute force");
  double best = std::numeric_limits<double>::infinity();
  BinaryConfig x(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
    best = std::min(best, q.energy(x));
  }
  if (n == 0) best = q.offset();
  return best;
}

std::vector<BinaryConfig> brute_force_qubo_minimizers(const QuboModel& q) {
  const int n = q.num_vars();
  const double best = brute_force_qubo_min(q);
  std::vector<BinaryConfig> mins;
  BinaryConfig x(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
    if (q.energy(x) == best) mins.push_back(x);
  }
  return mins;
}

}  // namespace minvc::test
