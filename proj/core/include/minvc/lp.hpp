#pragma once

#include <vector>

#include "minvc/graph.hpp"

namespace minvc {

/// Optimal half-integral solution of the vertex-cover LP relaxation.
/// Values are kept doubled (0, 1, 2 meaning 0, 1/2, 1) so that feasibility
/// and the objective stay exact integer arithmetic.
struct LpSolution {
  std::vector<int> doubled;
  double objective = 0.0;
  std::vector<int> zeros_set;  // sorted
  std::vector<int> half_set;
  std::vector<int> ones_set;

  int num_vertices() const { return static_cast<int>(doubled.size()); }
  double value(int v) const { return doubled[v] / 2.0; }
  int doubled_total() const;

  // p_h, the fraction of variables at 1/2.
  double half_ratio() const;
};

// Exact, deterministic LP optimum via maximum matching on the bipartite
// double cover (Koenig construction), with pendant-vertex dominance and a
// Dulmage-Mendelsohn style classification so that variables resolvable to
// {0,1} in some optimum come out integral. The leftover "hard core" is set
// to 1/2, which is optimal there.
LpSolution solve_lp_relaxation(const Graph& g);

}  // namespace minvc
