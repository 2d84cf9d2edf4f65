#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "minvc/pipeline.hpp"

namespace minvc {

/// Batch experiment: `instances` graphs per c value, each solved by every
/// listed pipeline. For md_hybrid, md_n_values sweeps the ambivalent count
/// (empty = match the LP half set per instance).
struct ExperimentSpec {
  int n_vertices = 0;
  std::vector<double> c_values;
  int instances = 0;
  std::vector<PipelineKind> pipelines;
  std::uint64_t seed = 0;
  std::vector<int> md_n_values;
  PipelineConfig base;
  long exact_node_budget = 10'000'000;
};

ExperimentSpec parse_experiment_spec(const std::string& json_text);
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

// Runs all (c, instance, pipeline) combinations, computing the exact
// optimum once per instance, appending one JSON line per run to
// records_path. Restartable: combinations already present in the file are
// skipped. A partial trailing line (interrupted write) is ignored. Returns
// the complete record set, previously existing ones included.
std::vector<RunRecord> run_experiment(const ExperimentSpec& spec,
                                      const std::filesystem::path& records_path,
                                      int jobs = 1, std::ostream* progress = nullptr);

std::vector<RunRecord> load_records(const std::filesystem::path& path);

struct AggregateRow {
  std::string pipeline;
  int n_vertices = 0;
  double c = 0.0;
  int md_n = -1;  // -1 when not an md_n sweep point
  int count = 0;
  double mean_residual = 0.0;
  double stderr_residual = 0.0;
  double mean_p_h = 0.0;  // n_subproblem / N
  double mean_cover_size = 0.0;
  double mean_violations = 0.0;
  double mean_total_time = 0.0;
};

// Groups by (pipeline, N, c, md_n); failed records are counted separately
// and excluded from the means. Order independent of record order.
std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records);

void write_aggregate_csv(const std::vector<AggregateRow>& rows, std::ostream& out);
// gnuplot-friendly: one block per pipeline, blank-line separated.
void write_aggregate_dat(const std::vector<AggregateRow>& rows, std::ostream& out);

}  // namespace minvc
