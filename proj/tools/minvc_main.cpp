// minvc: generate min-VC instances, run the hybrid pipelines on them, and
// aggregate experiment records.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "minvc/experiment.hpp"
#include "minvc/pipeline.hpp"
#include "minvc/rng.hpp"

namespace fs = std::filesystem;
using namespace minvc;

namespace {

int cmd_gen(int n, double c, std::uint64_t seed, const std::string& out,
            int count, const std::string& out_dir) {
  if (count == 1) {
    Graph g = generate_er({n, c, seed});
    std::string comment = "er n=" + std::to_string(n) + " c=" + std::to_string(c) +
                          " seed=" + std::to_string(seed);
    if (out.empty()) {
      save_graph(g, std::cout, comment);
    } else {
      save_graph(g, fs::path(out), comment);
      std::cerr << out << ": " << g.num_edges() << " edges\n";
    }
    return 0;
  }
  if (out_dir.empty()) {
    std::cerr << "gen: --out-dir is required with --count > 1\n";
    return 1;
  }
  fs::create_directories(out_dir);
  for (int k = 0; k < count; ++k) {
    std::uint64_t instance_seed = mix_seed({seed, static_cast<std::uint64_t>(k)});
    Graph g = generate_er({n, c, instance_seed});
    std::string name = "er_n" + std::to_string(n) + "_c" + std::to_string(c) + "_i" +
                       std::to_string(k) + ".el";
    std::string comment = "er n=" + std::to_string(n) + " c=" + std::to_string(c) +
                          " seed=" + std::to_string(instance_seed) + " index=" +
                          std::to_string(k);
    save_graph(g, fs::path(out_dir) / name, comment);
  }
  std::cerr << "wrote " << count << " instances to " << out_dir << "\n";
  return 0;
}

void print_summary(const RunRecord& rec) {
  std::cerr << "pipeline        " << rec.pipeline << "\n"
            << "n_subproblem    " << rec.n_subproblem << "\n"
            << "cover_size      " << rec.cover_size << "\n"
            << "violations      " << rec.violations << "\n"
            << "energy          " << rec.energy << "\n";
  if (rec.e_opt)
    std::cerr << "e_opt           " << *rec.e_opt
              << (rec.e_opt_proven ? "" : " (not proven)") << "\n";
  if (rec.residual_energy) std::cerr << "residual_energy " << *rec.residual_energy << "\n";
  std::cerr << "times (lp/md/sa/total) " << rec.lp_time << " " << rec.md_time << " "
            << rec.sa_time << " " << rec.total_time << "\n";
  if (rec.failed) std::cerr << "FAILED: " << rec.failure << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hybrid LP/MD + simulated-annealing solver for minimum vertex cover"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate Erdos-Renyi instance files");
  int gen_n = 0;
  double gen_c = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out, gen_out_dir;
  int gen_count = 1;
  gen->add_option("--n-vertices,-n", gen_n, "vertex count")->required();
  gen->add_option("--c", gen_c, "mean degree parameter c = p*N")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output edge-list file (default stdout)");
  gen->add_option("--count", gen_count, "number of instances");
  gen->add_option("--out-dir", gen_out_dir, "directory for --count > 1");

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "run one pipeline on one instance");
  std::string solve_graph, solve_pipeline = "lp_hybrid", solve_out;
  int solve_n = 0;
  double solve_c = 0.0;
  std::uint64_t solve_seed = 0;
  PipelineConfig cfg;
  std::optional<int> solve_md_n;
  std::optional<std::uint64_t> solve_sa_seed, solve_md_seed;
  long exact_budget = 10'000'000;
  bool skip_exact = false;
  std::string dump_qubo, md_dump;
  solve->add_option("--graph", solve_graph, "edge-list file (otherwise generated)");
  solve->add_option("--n-vertices,-n", solve_n, "vertex count for generation");
  solve->add_option("--c", solve_c, "mean degree for generation");
  solve->add_option("--seed", solve_seed, "instance seed");
  solve->add_option("--pipeline", solve_pipeline, "lp_hybrid | md_hybrid | direct");
  solve->add_option("--md-n", [&](const CLI::results_t& rs) {
    solve_md_n = std::stoi(rs[0]);
    return true;
  }, "ambivalent count for md_hybrid (default: match |half_set|)");
  solve->add_option("--eval-lambda", cfg.eval_lambda, "penalty for reported energies");
  solve->add_option("--lambda-sub", cfg.lambda_subproblem, "penalty for the subproblem QUBO");
  solve->add_option("--lambda-md", cfg.lambda_md, "penalty for the MD QUBO");
  solve->add_option("--sa-reads", cfg.sa.num_reads, "SA reads");
  solve->add_option("--sa-sweeps", cfg.sa.sweeps, "SA sweeps per read");
  solve->add_option("--sa-seed", [&](const CLI::results_t& rs) {
    solve_sa_seed = std::stoull(rs[0]);
    return true;
  }, "SA seed (default derived from --seed)");
  solve->add_option("--md-steps", cfg.md.total_steps, "MD integration steps");
  solve->add_option("--md-seed", [&](const CLI::results_t& rs) {
    solve_md_seed = std::stoull(rs[0]);
    return true;
  }, "MD seed (default derived from --seed)");
  solve->add_option("--md-window", cfg.md.avg_window, "trailing averaging fraction");
  solve->add_option("--exact-budget", exact_budget, "B&B node budget (0 = unlimited)");
  solve->add_flag("--skip-exact", skip_exact, "skip the exact oracle");
  solve->add_option("--out", solve_out, "append the JSON record here (default stdout)");
  solve->add_option("--dump-qubo", dump_qubo, "write the subproblem-penalty QUBO in coordinate format");
  solve->add_option("--md-dump", md_dump, "trajectory dump CSV (md_hybrid)");
  solve->add_option("--md-dump-stride", cfg.md.dump_stride, "dump every k-th step");

  // ---- experiment ----
  auto* experiment = app.add_subcommand("experiment", "run a batch experiment spec");
  std::string exp_spec, exp_out;
  int exp_jobs = 1;
  experiment->add_option("--spec", exp_spec, "experiment spec (JSON)")->required();
  experiment->add_option("--out", exp_out, "records file (JSON lines)")->required();
  experiment->add_option("--jobs", exp_jobs, "parallel instances");

  // ---- report ----
  auto* report = app.add_subcommand("report", "aggregate records into CSV/.dat");
  std::string rep_records, rep_csv, rep_dat;
  report->add_option("--records", rep_records, "records file (JSON lines)")->required();
  report->add_option("--csv", rep_csv, "summary CSV (default stdout)");
  report->add_option("--dat", rep_dat, "gnuplot-compatible .dat file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_gen(gen_n, gen_c, gen_seed, gen_out, gen_count, gen_out_dir);
    }

    if (solve->parsed()) {
      auto kind = pipeline_from_string(solve_pipeline);
      if (!kind) {
        std::cerr << "unknown pipeline: " << solve_pipeline << "\n";
        return 1;
      }
      cfg.pipeline = *kind;
      cfg.md_n = solve_md_n;

      Graph g;
      InstanceInfo info;
      if (!solve_graph.empty()) {
        g = load_graph(fs::path(solve_graph));
        info = {g.num_vertices(), std::nullopt, solve_seed, 0};
      } else {
        if (solve_n <= 0) {
          std::cerr << "solve: need --graph or --n-vertices/--c/--seed\n";
          return 1;
        }
        g = generate_er({solve_n, solve_c, solve_seed});
        info = {solve_n, solve_c, solve_seed, 0};
      }
      const std::uint64_t pipe_id = static_cast<std::uint64_t>(cfg.pipeline);
      cfg.sa.seed = solve_sa_seed ? *solve_sa_seed : mix_seed({solve_seed, pipe_id, 1});
      cfg.md.seed = solve_md_seed ? *solve_md_seed : mix_seed({solve_seed, 2});

      if (!dump_qubo.empty()) {
        std::ofstream qout(dump_qubo);
        export_qubo_coord(build_minvc_qubo(g, cfg.lambda_subproblem), qout);
      }

      RunRecord rec;
      if (!md_dump.empty() && cfg.pipeline == PipelineKind::md_hybrid) {
        // run the pipeline normally, then replay MD with the dump attached
        rec = run_pipeline(g, cfg, info);
        std::ofstream dump(md_dump);
        dump << "step,index,phi\n";
        IsingModel ising = qubo_to_ising(build_minvc_qubo(g, cfg.lambda_md));
        run_md(ising, cfg.md, &dump);
      } else {
        rec = run_pipeline(g, cfg, info);
      }

      if (!skip_exact) {
        ExactResult exact = solve_exact(g, {exact_budget, true});
        attach_exact(rec, exact);
      }
      print_summary(rec);
      if (solve_out.empty()) {
        std::cout << record_to_json(rec) << "\n";
      } else {
        std::ofstream out(solve_out, std::ios::app);
        if (!out) throw std::runtime_error("cannot append to " + solve_out);
        out << record_to_json(rec) << "\n";
      }
      return rec.failed ? 1 : 0;
    }

    if (experiment->parsed()) {
      ExperimentSpec spec = load_experiment_spec(exp_spec);
      std::vector<RunRecord> records =
          run_experiment(spec, exp_out, exp_jobs, &std::cerr);
      std::cerr << records.size() << " records in " << exp_out << "\n";
      return 0;
    }

    if (report->parsed()) {
      std::vector<RunRecord> records = load_records(rep_records);
      if (records.empty()) {
        std::cerr << "no records in " << rep_records << "\n";
        return 1;
      }
      auto rows = aggregate(records);
      if (rep_csv.empty()) {
        write_aggregate_csv(rows, std::cout);
      } else {
        std::ofstream out(rep_csv);
        write_aggregate_csv(rows, out);
        std::cerr << "wrote " << rep_csv << "\n";
      }
      if (!rep_dat.empty()) {
        std::ofstream out(rep_dat);
        write_aggregate_dat(rows, out);
        std::cerr << "wrote " << rep_dat << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
