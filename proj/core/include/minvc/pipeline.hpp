#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "minvc/anneal.hpp"
#include "minvc/exact.hpp"
#include "minvc/graph.hpp"
#include "minvc/lp.hpp"
#include "minvc/md.hpp"
#include "minvc/model.hpp"

namespace minvc {

enum class PipelineKind { lp_hybrid, md_hybrid, direct };

std::string to_string(PipelineKind kind);
std::optional<PipelineKind> pipeline_from_string(const std::string& name);

/// Per-run configuration. Each pipeline optimizes under its own QUBO
/// penalty (lambda_md for the MD model, lambda_subproblem for what the
/// sampler sees) while energies are reported under the common eval_lambda,
/// so residual energies are comparable across pipelines.
struct PipelineConfig {
  PipelineKind pipeline = PipelineKind::lp_hybrid;
  double lambda_md = 2.0;
  double lambda_subproblem = 1.0;
  double eval_lambda = 2.0;
  MdConfig md;                // md_hybrid only
  std::optional<int> md_n;    // ambivalent count; unset = match |half_set|
  SaConfig sa;
};

struct InstanceInfo {
  int n_vertices = 0;
  std::optional<double> c;
  std::uint64_t seed = 0;
  int index = 0;
};

struct RunRecord {
  int schema = 1;
  std::string pipeline;
  InstanceInfo instance;
  std::optional<int> md_n_requested;
  int n_subproblem = 0;
  BinaryConfig solution;
  double energy = 0.0;  // at eval_lambda
  int cover_size = 0;
  int violations = 0;
  std::optional<double> e_opt;
  bool e_opt_proven = false;
  std::optional<double> residual_energy;
  double lp_time = 0.0;
  double md_time = 0.0;
  double sa_time = 0.0;
  double total_time = 0.0;
  std::uint64_t sa_seed = 0;
  std::uint64_t md_seed = 0;
  bool failed = false;
  std::string failure;
};

// Three-step hybrid: LP relaxation, fix the integral variables, re-optimize
// the half set through the solver. An empty half set short-circuits to the
// (then exact) LP solution.
RunRecord run_lp_hybrid(const Graph& g, const PipelineConfig& cfg,
                        const InstanceInfo& info, const SubproblemSolver& solver);

// Prior-work baseline: MD preprocessing at lambda_md, freeze all but the
// md_n most ambivalent variables, re-optimize those.
RunRecord run_md_hybrid(const Graph& g, const PipelineConfig& cfg,
                        const InstanceInfo& info, const SubproblemSolver& solver);

// Solver on the full QUBO, no preprocessing.
RunRecord run_direct(const Graph& g, const PipelineConfig& cfg,
                     const InstanceInfo& info, const SubproblemSolver& solver);

RunRecord run_pipeline(const Graph& g, const PipelineConfig& cfg,
                       const InstanceInfo& info, const SubproblemSolver& solver);
RunRecord run_pipeline(const Graph& g, const PipelineConfig& cfg,
                       const InstanceInfo& info);

// Fills e_opt and residual_energy from the exact oracle. With a penalty
// >= 1 the QUBO optimum is the minimum cover size. residual is
// (E - E_opt)/|E_opt|, or the absolute difference when E_opt == 0.
void attach_exact(RunRecord& rec, const ExactResult& exact);

// One JSON object per record, stable field order, schema-versioned.
std::string record_to_json(const RunRecord& rec);
RunRecord record_from_json(const std::string& line);

}  // namespace minvc
