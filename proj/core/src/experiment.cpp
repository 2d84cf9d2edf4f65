#include "minvc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "minvc/rng.hpp"

namespace minvc {

namespace {

using nlohmann::json;

std::string format_c(double c) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", c);
  return buf;
}

// resume key: one per (pipeline, c, instance, requested md_n) combination
std::string run_key(const std::string& pipeline, double c, int instance_index,
                    std::optional<int> md_n) {
  std::ostringstream os;
  os << pipeline << '|' << format_c(c) << '|' << instance_index << '|'
     << (md_n ? std::to_string(*md_n) : std::string("-"));
  return os.str();
}

std::string run_key(const RunRecord& rec) {
  return run_key(rec.pipeline, rec.instance.c.value_or(0.0), rec.instance.index,
                 rec.md_n_requested);
}

MdConfig parse_md(const json& j, MdConfig base) {
  if (j.contains("alpha_f")) base.alpha_f = j.at("alpha_f").get<double>();
  if (j.contains("rho1")) base.rho1 = j.at("rho1").get<double>();
  if (j.contains("rho2")) base.rho2 = j.at("rho2").get<double>();
  if (j.contains("beta_f")) base.beta_f = j.at("beta_f").get<double>();
  if (j.contains("kappa1")) base.kappa1 = j.at("kappa1").get<double>();
  if (j.contains("kappa2")) base.kappa2 = j.at("kappa2").get<double>();
  if (j.contains("potential_power"))
    base.potential_power = j.at("potential_power").get<int>();
  if (j.contains("total_steps")) base.total_steps = j.at("total_steps").get<long>();
  if (j.contains("avg_window")) base.avg_window = j.at("avg_window").get<double>();
  return base;
}

SaConfig parse_sa(const json& j, SaConfig base) {
  if (j.contains("num_reads")) base.num_reads = j.at("num_reads").get<int>();
  if (j.contains("sweeps")) base.sweeps = j.at("sweeps").get<int>();
  if (j.contains("beta_min")) base.beta_min = j.at("beta_min").get<double>();
  if (j.contains("beta_max")) base.beta_max = j.at("beta_max").get<double>();
  if (j.contains("schedule")) {
    std::string s = j.at("schedule").get<std::string>();
    if (s == "geometric")
      base.schedule = BetaSchedule::geometric;
    else if (s == "linear")
      base.schedule = BetaSchedule::linear;
    else
      throw std::invalid_argument("unknown beta schedule: " + s);
  }
  return base;
}

}  // namespace

ExperimentSpec parse_experiment_spec(const std::string& json_text) {
  json j = json::parse(json_text);
  ExperimentSpec spec;
  spec.n_vertices = j.at("n_vertices").get<int>();
  spec.c_values = j.at("c_values").get<std::vector<double>>();
  spec.instances = j.at("instances").get<int>();
  for (const auto& name : j.at("pipelines")) {
    auto kind = pipeline_from_string(name.get<std::string>());
    if (!kind) throw std::invalid_argument("unknown pipeline: " + name.get<std::string>());
    spec.pipelines.push_back(*kind);
  }
  if (spec.n_vertices <= 0) throw std::invalid_argument("n_vertices must be positive");
  if (spec.instances <= 0) throw std::invalid_argument("instances must be positive");
  if (spec.c_values.empty()) throw std::invalid_argument("c_values must be nonempty");
  if (spec.pipelines.empty()) throw std::invalid_argument("pipelines must be nonempty");
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("md_n_values"))
    spec.md_n_values = j.at("md_n_values").get<std::vector<int>>();
  if (j.contains("md")) spec.base.md = parse_md(j.at("md"), spec.base.md);
  if (j.contains("sa")) spec.base.sa = parse_sa(j.at("sa"), spec.base.sa);
  if (j.contains("lambda_md")) spec.base.lambda_md = j.at("lambda_md").get<double>();
  if (j.contains("lambda_subproblem"))
    spec.base.lambda_subproblem = j.at("lambda_subproblem").get<double>();
  if (j.contains("eval_lambda"))
    spec.base.eval_lambda = j.at("eval_lambda").get<double>();
  if (j.contains("exact_node_budget"))
    spec.exact_node_budget = j.at("exact_node_budget").get<long>();
  return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_experiment_spec(os.str());
}

namespace {

// Reads records and reports how many leading bytes of the file hold intact
// lines; an interrupted append leaves a partial trailing line behind, which
// is ignored (and truncated by the next run_experiment).
std::vector<RunRecord> load_records_impl(const std::filesystem::path& path,
                                         std::uintmax_t* valid_bytes) {
  std::vector<RunRecord> records;
  if (valid_bytes) *valid_bytes = 0;
  std::ifstream in(path, std::ios::binary);
  if (!in) return records;
  std::string line;
  long lineno = 0;
  std::uintmax_t good = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const bool at_end = in.eof();  // last line had no trailing newline
    const bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) {
      try {
        records.push_back(record_from_json(line));
      } catch (const std::exception& e) {
        if (at_end) break;
        throw std::runtime_error("bad record at line " + std::to_string(lineno) +
                                 ": " + e.what());
      }
    }
    good = at_end ? good + line.size() : static_cast<std::uintmax_t>(in.tellg());
  }
  if (valid_bytes) *valid_bytes = good;
  return records;
}

}  // namespace

std::vector<RunRecord> load_records(const std::filesystem::path& path) {
  return load_records_impl(path, nullptr);
}

std::vector<RunRecord> run_experiment(const ExperimentSpec& spec,
                                      const std::filesystem::path& records_path,
                                      int jobs, std::ostream* progress) {
  std::uintmax_t valid_bytes = 0;
  std::vector<RunRecord> existing = load_records_impl(records_path, &valid_bytes);
  if (std::filesystem::exists(records_path) &&
      std::filesystem::file_size(records_path) > valid_bytes) {
    std::filesystem::resize_file(records_path, valid_bytes);  // drop partial line
  }
  std::set<std::string> done;
  for (const auto& rec : existing) done.insert(run_key(rec));

  struct Task {
    double c;
    int instance_index;
  };
  std::vector<Task> tasks;
  for (double c : spec.c_values)
    for (int k = 0; k < spec.instances; ++k) tasks.push_back({c, k});

  // requested md_n values per md_hybrid run; empty optional = match half set
  std::vector<std::optional<int>> md_points;
  if (spec.md_n_values.empty())
    md_points.push_back(std::nullopt);
  else
    for (int v : spec.md_n_values) md_points.push_back(v);

  std::mutex io_mutex;
  std::ofstream out(records_path, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to " + records_path.string());
  std::vector<RunRecord> fresh;

  auto emit = [&](const RunRecord& rec) {
    std::lock_guard<std::mutex> lock(io_mutex);
    out << record_to_json(rec) << '\n';
    out.flush();
    fresh.push_back(rec);
    if (progress)
      *progress << rec.pipeline << " c=" << rec.instance.c.value_or(0.0)
                << " k=" << rec.instance.index << " residual="
                << (rec.residual_energy ? std::to_string(*rec.residual_energy)
                                        : std::string("n/a"))
                << (rec.failed ? " FAILED" : "") << '\n';
  };

  auto run_task = [&](const Task& task) {
    const std::uint64_t c_bits = std::bit_cast<std::uint64_t>(task.c);
    const std::uint64_t instance_seed =
        mix_seed({spec.seed, static_cast<std::uint64_t>(spec.n_vertices), c_bits,
                  static_cast<std::uint64_t>(task.instance_index)});

    // collect the runs still missing before doing any work
    struct Pending {
      PipelineKind kind;
      std::optional<int> md_n;
    };
    std::vector<Pending> pending;
    for (PipelineKind kind : spec.pipelines) {
      if (kind == PipelineKind::md_hybrid) {
        for (const auto& md_n : md_points) {
          if (!done.count(run_key(to_string(kind), task.c, task.instance_index, md_n)))
            pending.push_back({kind, md_n});
        }
      } else {
        if (!done.count(run_key(to_string(kind), task.c, task.instance_index,
                                std::nullopt)))
          pending.push_back({kind, std::nullopt});
      }
    }
    if (pending.empty()) return;

    Graph g = generate_er({spec.n_vertices, task.c, instance_seed});
    ExactResult exact = solve_exact(g, {spec.exact_node_budget, true});

    InstanceInfo info{spec.n_vertices, task.c, instance_seed, task.instance_index};
    for (const Pending& run : pending) {
      PipelineConfig cfg = spec.base;
      cfg.pipeline = run.kind;
      cfg.md_n = run.md_n;
      const std::uint64_t pipe_id = static_cast<std::uint64_t>(run.kind);
      cfg.sa.seed = mix_seed({instance_seed, pipe_id,
                              static_cast<std::uint64_t>(run.md_n.value_or(-1)), 1});
      cfg.md.seed = mix_seed({instance_seed, 2});
      RunRecord rec = run_pipeline(g, cfg, info);
      attach_exact(rec, exact);
      emit(rec);
    }
  };

  if (jobs <= 1) {
    for (const Task& task : tasks) run_task(task);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t k = next.fetch_add(1);
        if (k >= tasks.size()) break;
        run_task(tasks[k]);
      }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min<int>(jobs, static_cast<int>(tasks.size()));
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<RunRecord> all = std::move(existing);
  all.insert(all.end(), fresh.begin(), fresh.end());
  return all;
}

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records) {
  struct Acc {
    int count = 0;
    std::vector<double> residuals;
    double p_h = 0, cover = 0, violations = 0, total_time = 0;
  };
  std::map<std::tuple<std::string, int, double, int>, Acc> groups;
  for (const auto& rec : records) {
    if (rec.failed) continue;
    auto key = std::make_tuple(rec.pipeline, rec.instance.n_vertices,
                               rec.instance.c.value_or(0.0),
                               rec.md_n_requested.value_or(-1));
    Acc& acc = groups[key];
    ++acc.count;
    if (rec.residual_energy) acc.residuals.push_back(*rec.residual_energy);
    if (rec.instance.n_vertices > 0)
      acc.p_h += static_cast<double>(rec.n_subproblem) / rec.instance.n_vertices;
    acc.cover += rec.cover_size;
    acc.violations += rec.violations;
    acc.total_time += rec.total_time;
  }
  std::vector<AggregateRow> rows;
  for (const auto& [key, acc] : groups) {
    AggregateRow row;
    row.pipeline = std::get<0>(key);
    row.n_vertices = std::get<1>(key);
    row.c = std::get<2>(key);
    row.md_n = std::get<3>(key);
    row.count = acc.count;
    if (!acc.residuals.empty()) {
      const double n = static_cast<double>(acc.residuals.size());
      double mean = 0;
      for (double r : acc.residuals) mean += r;
      mean /= n;
      row.mean_residual = mean;
      if (acc.residuals.size() > 1) {
        double var = 0;
        for (double r : acc.residuals) var += (r - mean) * (r - mean);
        var /= (n - 1);
        row.stderr_residual = std::sqrt(var / n);
      }
    }
    row.mean_p_h = acc.p_h / acc.count;
    row.mean_cover_size = acc.cover / acc.count;
    row.mean_violations = acc.violations / acc.count;
    row.mean_total_time = acc.total_time / acc.count;
    rows.push_back(row);
  }
  return rows;
}

void write_aggregate_csv(const std::vector<AggregateRow>& rows, std::ostream& out) {
  out << "pipeline,n_vertices,c,md_n,count,mean_residual,stderr_residual,"
         "mean_p_h,mean_cover_size,mean_violations,mean_total_time\n";
  for (const auto& r : rows) {
    out << r.pipeline << ',' << r.n_vertices << ',' << format_c(r.c) << ',';
    if (r.md_n >= 0) out << r.md_n;
    out << ',' << r.count << ',' << r.mean_residual << ',' << r.stderr_residual << ','
        << r.mean_p_h << ',' << r.mean_cover_size << ',' << r.mean_violations << ','
        << r.mean_total_time << '\n';
  }
}

void write_aggregate_dat(const std::vector<AggregateRow>& rows, std::ostream& out) {
  std::string current;
  bool first = true;
  for (const auto& r : rows) {
    if (r.pipeline != current) {
      if (!first) out << "\n\n";
      first = false;
      current = r.pipeline;
      out << "# pipeline=" << current << "\n";
      out << "# n_vertices c md_n count mean_residual stderr_residual mean_p_h\n";
    }
    out << r.n_vertices << ' ' << format_c(r.c) << ' ' << r.md_n << ' ' << r.count
        << ' ' << r.mean_residual << ' ' << r.stderr_residual << ' ' << r.mean_p_h
        << '\n';
  }
}

}  // namespace minvc
