#pragma once

#include "minvc/graph.hpp"
#include "minvc/model.hpp"

namespace minvc {

struct ExactResult {
  BinaryConfig cover;  // feasible 0/1 assignment
  int size = 0;
  bool proven_optimal = false;
  long nodes_explored = 0;
};

struct ExactOptions {
  long node_budget = 10'000'000;  // <= 0 means unlimited
  bool nt_fixing = true;          // LP persistency fixing at every node
};

// Branch and bound with the exact LP relaxation as bound: prune when
// fixed + ceil(LP) cannot beat the incumbent, fix the LP ones/zeros sets,
// branch on the half-set vertex of maximum residual degree (lowest index on
// ties), in-cover branch first. Returns the best incumbent with
// proven_optimal = false when the node budget runs out.
ExactResult solve_exact(const Graph& g, const ExactOptions& opts = {});

}  // namespace minvc
