#include "minvc/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace minvc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void finish_record(RunRecord& rec, const Graph& g, const PipelineConfig& cfg,
                   const BinaryConfig& solution) {
  rec.solution = solution;
  QuboModel eval = build_minvc_qubo(g, cfg.eval_lambda);
  rec.energy = eval.energy(solution);
  CoverStats stats = evaluate_cover(g, solution);
  rec.cover_size = stats.cover_size;
  rec.violations = stats.violated_edges;
}

RunRecord make_base_record(PipelineKind kind, const PipelineConfig& cfg,
                           const InstanceInfo& info) {
  RunRecord rec;
  rec.pipeline = to_string(kind);
  rec.instance = info;
  rec.sa_seed = cfg.sa.seed;
  rec.md_seed = cfg.md.seed;
  rec.md_n_requested = cfg.md_n;
  return rec;
}

}  // namespace

std::string to_string(PipelineKind kind) {
  switch (kind) {
    case PipelineKind::lp_hybrid: return "lp_hybrid";
    case PipelineKind::md_hybrid: return "md_hybrid";
    case PipelineKind::direct: return "direct";
  }
  throw std::logic_error("unknown pipeline kind");
}

std::optional<PipelineKind> pipeline_from_string(const std::string& name) {
  if (name == "lp_hybrid") return PipelineKind::lp_hybrid;
  if (name == "md_hybrid") return PipelineKind::md_hybrid;
  if (name == "direct") return PipelineKind::direct;
  return std::nullopt;
}

RunRecord run_lp_hybrid(const Graph& g, const PipelineConfig& cfg,
                        const InstanceInfo& info, const SubproblemSolver& solver) {
  RunRecord rec = make_base_record(PipelineKind::lp_hybrid, cfg, info);
  const auto t_total = Clock::now();
  try {
    const auto t_lp = Clock::now();
    LpSolution lp = solve_lp_relaxation(g);
    rec.lp_time = seconds_since(t_lp);
    rec.n_subproblem = static_cast<int>(lp.half_set.size());

    BinaryConfig solution(g.num_vertices(), 0);
    if (lp.half_set.empty()) {
      for (int v : lp.ones_set) solution[v] = 1;
    } else {
      std::map<int, int> fixed;
      for (int v : lp.ones_set) fixed[v] = 1;
      for (int v : lp.zeros_set) fixed[v] = -1;
      IsingModel ising = qubo_to_ising(build_minvc_qubo(g, cfg.lambda_subproblem));
      ReducedIsing reduced = reduce_with_fixed(ising, fixed);
      const auto t_sa = Clock::now();
      SampleSet samples = solver.solve(reduced.model);
      rec.sa_time = seconds_since(t_sa);
      SpinConfig spins = expand_with_fixed(g.num_vertices(), fixed,
                                           reduced.index_map, samples.best().spins);
      solution = spins_to_binary(spins);
    }
    finish_record(rec, g, cfg, solution);
  } catch (const std::exception& e) {
    rec.failed = true;
    rec.failure = e.what();
  }
  rec.total_time = seconds_since(t_total);
  return rec;
}

RunRecord run_md_hybrid(const Graph& g, const PipelineConfig& cfg,
                        const InstanceInfo& info, const SubproblemSolver& solver) {
  RunRecord rec = make_base_record(PipelineKind::md_hybrid, cfg, info);
  const auto t_total = Clock::now();
  try {
    IsingModel ising = qubo_to_ising(build_minvc_qubo(g, cfg.lambda_md));

    int n_ambivalent;
    if (cfg.md_n) {
      n_ambivalent = *cfg.md_n;
    } else {
      // comparison protocol: re-optimize as many variables as the LP run
      const auto t_lp = Clock::now();
      LpSolution lp = solve_lp_relaxation(g);
      rec.lp_time = seconds_since(t_lp);
      n_ambivalent = static_cast<int>(lp.half_set.size());
    }

    const auto t_md = Clock::now();
    MdTrajectoryStats stats = run_md(ising, cfg.md);
    rec.md_time = seconds_since(t_md);

    AmbivalentSplit split = split_ambivalent(stats, n_ambivalent);
    rec.n_subproblem = n_ambivalent;

    ReducedIsing reduced = reduce_with_fixed(ising, split.frozen);
    const auto t_sa = Clock::now();
    SampleSet samples = solver.solve(reduced.model);
    rec.sa_time = seconds_since(t_sa);
    SpinConfig spins = expand_with_fixed(g.num_vertices(), split.frozen,
                                         reduced.index_map, samples.best().spins);
    finish_record(rec, g, cfg, spins_to_binary(spins));
  } catch (const std::exception& e) {
    rec.failed = true;
    rec.failure = e.what();
  }
  rec.total_time = seconds_since(t_total);
  return rec;
}

RunRecord run_direct(const Graph& g, const PipelineConfig& cfg,
                     const InstanceInfo& info, const SubproblemSolver& solver) {
  RunRecord rec = make_base_record(PipelineKind::direct, cfg, info);
  const auto t_total = Clock::now();
  try {
    IsingModel ising = qubo_to_ising(build_minvc_qubo(g, cfg.lambda_subproblem));
    rec.n_subproblem = g.num_vertices();
    const auto t_sa = Clock::now();
    SampleSet samples = solver.solve(ising);
    rec.sa_time = seconds_since(t_sa);
    finish_record(rec, g, cfg, spins_to_binary(samples.best().spins));
  } catch (const std::exception& e) {
    rec.failed = true;
    rec.failure = e.what();
  }
  rec.total_time = seconds_since(t_total);
  return rec;
}

RunRecord run_pipeline(const Graph& g, const PipelineConfig& cfg,
                       const InstanceInfo& info, const SubproblemSolver& solver) {
  switch (cfg.pipeline) {
    case PipelineKind::lp_hybrid: return run_lp_hybrid(g, cfg, info, solver);
    case PipelineKind::md_hybrid: return run_md_hybrid(g, cfg, info, solver);
    case PipelineKind::direct: return run_direct(g, cfg, info, solver);
  }
  throw std::logic_error("unknown pipeline kind");
}

RunRecord run_pipeline(const Graph& g, const PipelineConfig& cfg,
                       const InstanceInfo& info) {
  SaSolver solver(cfg.sa);
  return run_pipeline(g, cfg, info, solver);
}

void attach_exact(RunRecord& rec, const ExactResult& exact) {
  rec.e_opt = static_cast<double>(exact.size);
  rec.e_opt_proven = exact.proven_optimal;
  if (rec.failed) return;
  const double e_opt = *rec.e_opt;
  rec.residual_energy =
      e_opt != 0.0 ? (rec.energy - e_opt) / std::abs(e_opt) : rec.energy - e_opt;
}

namespace {

std::string solution_string(const BinaryConfig& x) {
  std::string s;
  s.reserve(x.size());
  for (int v : x) s.push_back(v ? '1' : '0');
  return s;
}

BinaryConfig solution_from_string(const std::string& s) {
  BinaryConfig x;
  x.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bad solution string");
    x.push_back(ch == '1' ? 1 : 0);
  }
  return x;
}

}  // namespace

std::string record_to_json(const RunRecord& rec) {
  nlohmann::json j;
  j["schema"] = rec.schema;
  j["pipeline"] = rec.pipeline;
  j["n_vertices"] = rec.instance.n_vertices;
  if (rec.instance.c)
    j["c"] = *rec.instance.c;
  else
    j["c"] = nullptr;
  j["instance_seed"] = rec.instance.seed;
  j["instance_index"] = rec.instance.index;
  if (rec.md_n_requested)
    j["md_n"] = *rec.md_n_requested;
  else
    j["md_n"] = nullptr;
  j["n_subproblem"] = rec.n_subproblem;
  j["solution"] = solution_string(rec.solution);
  j["energy"] = rec.energy;
  j["cover_size"] = rec.cover_size;
  j["violations"] = rec.violations;
  if (rec.e_opt)
    j["e_opt"] = *rec.e_opt;
  else
    j["e_opt"] = nullptr;
  j["e_opt_proven"] = rec.e_opt_proven;
  if (rec.residual_energy)
    j["residual_energy"] = *rec.residual_energy;
  else
    j["residual_energy"] = nullptr;
  j["lp_time"] = rec.lp_time;
  j["md_time"] = rec.md_time;
  j["sa_time"] = rec.sa_time;
  j["total_time"] = rec.total_time;
  j["sa_seed"] = rec.sa_seed;
  j["md_seed"] = rec.md_seed;
  j["failed"] = rec.failed;
  j["failure"] = rec.failure;
  return j.dump();
}

RunRecord record_from_json(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  RunRecord rec;
  rec.schema = j.at("schema").get<int>();
  if (rec.schema != 1) throw std::invalid_argument("unsupported record schema");
  rec.pipeline = j.at("pipeline").get<std::string>();
  rec.instance.n_vertices = j.at("n_vertices").get<int>();
  if (!j.at("c").is_null()) rec.instance.c = j.at("c").get<double>();
  rec.instance.seed = j.at("instance_seed").get<std::uint64_t>();
  rec.instance.index = j.at("instance_index").get<int>();
  if (!j.at("md_n").is_null()) rec.md_n_requested = j.at("md_n").get<int>();
  rec.n_subproblem = j.at("n_subproblem").get<int>();
  rec.solution = solution_from_string(j.at("solution").get<std::string>());
  rec.energy = j.at("energy").get<double>();
  rec.cover_size = j.at("cover_size").get<int>();
  rec.violations = j.at("violations").get<int>();
  if (!j.at("e_opt").is_null()) rec.e_opt = j.at("e_opt").get<double>();
  rec.e_opt_proven = j.at("e_opt_proven").get<bool>();
  if (!j.at("residual_energy").is_null())
    rec.residual_energy = j.at("residual_energy").get<double>();
  rec.lp_time = j.at("lp_time").get<double>();
  rec.md_time = j.at("md_time").get<double>();
  rec.sa_time = j.at("sa_time").get<double>();
  rec.total_time = j.at("total_time").get<double>();
  rec.sa_seed = j.at("sa_seed").get<std::uint64_t>();
  rec.md_seed = j.at("md_seed").get<std::uint64_t>();
  rec.failed = j.at("failed").get<bool>();
  rec.failure = j.at("failure").get<std::string>();
  return rec;
}

}  // namespace minvc
