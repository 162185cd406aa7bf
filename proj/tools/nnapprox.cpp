// Command-line front end: run approximations, evaluate reference parameter
// sets, and sweep over m or l, emitting plot-ready CSV/JSON data.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nnapprox/config_io.hpp"
#include "nnapprox/io.hpp"
#include "nnapprox/pipeline.hpp"
#include "nnapprox/reference_tables.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string preset_name;
  std::string config_path;
  std::string out_dir;
  double alpha = 0.5;
  std::optional<int> m;
  std::optional<std::size_t> n, l;
  std::optional<double> a, b, c, d;
  std::optional<int> max_outer;
  std::string dump_system_path;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts, bool with_l_flag) {
  cmd->add_option("--out", opts.out_dir, "output directory")->required();
  cmd->add_option("--preset", opts.preset_name,
                  "preset name: rational_power | expsum_stretched");
  cmd->add_option("--config", opts.config_path, "config file (key = value lines)");
  cmd->add_option("--alpha", opts.alpha, "target exponent in (0, 1)");
  cmd->add_option("--n", opts.n, "quadrature node count");
  if (with_l_flag) cmd->add_option("--l", opts.l, "candidate count");
  cmd->add_option("--c", opts.c, "candidate interval lower end");
  cmd->add_option("--d", opts.d, "candidate interval upper end");
  cmd->add_option("--a", opts.a, "fit interval lower end");
  cmd->add_option("--b", opts.b, "fit interval upper end");
  cmd->add_option("--max-outer", opts.max_outer, "outer iteration cap");
  cmd->add_option("--dump-system", opts.dump_system_path,
                  "write the assembled design system as CSV to this path");
}

nnapprox::ExperimentConfig build_config(const CommonOpts& opts) {
  nnapprox::ExperimentConfig cfg;
  if (!opts.config_path.empty()) {
    cfg = nnapprox::load_config(opts.config_path);
  } else if (!opts.preset_name.empty()) {
    cfg = nnapprox::preset(opts.preset_name, opts.alpha, opts.m.value_or(10));
  } else {
    throw std::invalid_argument("either --preset or --config is required");
  }
  if (opts.m) cfg.m = *opts.m;
  if (opts.n) cfg.n = *opts.n;
  if (opts.l) cfg.l = *opts.l;
  if (opts.a) cfg.a = *opts.a;
  if (opts.b) cfg.b = *opts.b;
  if (opts.c) cfg.c = *opts.c;
  if (opts.d) cfg.d = *opts.d;
  if (opts.max_outer) cfg.max_outer = *opts.max_outer;
  return cfg;
}

json config_json(const nnapprox::ExperimentConfig& cfg) {
  return json{{"target", nnapprox::to_string(cfg.target.tag)},
              {"alpha", cfg.target.alpha},
              {"family", nnapprox::to_string(cfg.family)},
              {"a", cfg.a},
              {"b", cfg.b},
              {"transform", nnapprox::to_string(cfg.transform)},
              {"weight", nnapprox::to_string(cfg.weight)},
              {"n", cfg.n},
              {"l", cfg.l},
              {"c", cfg.c},
              {"d", cfg.d},
              {"spacing", nnapprox::to_string(cfg.spacing)},
              {"m", cfg.m},
              {"max_outer", cfg.max_outer}};
}

std::vector<int> attained_support_sizes(const nnapprox::NnlsTrace& trace) {
  std::set<int> sizes;
  for (const auto& rec : trace.records) sizes.insert(rec.support_size);
  return {sizes.begin(), sizes.end()};
}

void write_run_files(const fs::path& dir, const nnapprox::SolveResult& solved,
                     const nnapprox::RunResult& run, std::vector<std::string>& outputs) {
  fs::create_directories(dir);
  nnapprox::atomic_write_file(dir / "params.csv", nnapprox::params_csv_string(run.approximant));
  nnapprox::atomic_write_file(
      dir / "params.json",
      nnapprox::params_json(run.approximant, solved.config.target.alpha).dump(2) + "\n");
  nnapprox::atomic_write_file(dir / "error_curve.csv",
                              nnapprox::error_curve_csv_string(run.report));
  nnapprox::atomic_write_file(dir / "trace.csv", nnapprox::trace_csv_string(solved.trace));
  outputs.push_back((dir / "params.csv").string());
  outputs.push_back((dir / "params.json").string());
  outputs.push_back((dir / "error_curve.csv").string());
  outputs.push_back((dir / "trace.csv").string());
}

void write_manifest(const fs::path& dir, json manifest, std::vector<std::string>& outputs) {
  outputs.push_back((dir / "manifest.json").string());
  manifest["outputs"] = outputs;
  nnapprox::atomic_write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

int cmd_approximate(const CommonOpts& opts) {
  const nnapprox::ExperimentConfig cfg = build_config(opts);
  const fs::path dir(opts.out_dir);
  fs::create_directories(dir);

  if (!opts.dump_system_path.empty()) {
    const auto grid = nnapprox::build_grid(cfg.a, cfg.b, cfg.n, cfg.transform, cfg.weight);
    const auto cands = nnapprox::build_candidates(cfg.c, cfg.d, cfg.l, cfg.spacing);
    const auto basis = nnapprox::make_basis(cfg.family, cfg.target);
    const auto sys = nnapprox::assemble(grid, basis, cands, cfg.target);
    nnapprox::atomic_write_file(opts.dump_system_path, nnapprox::system_csv_string(sys));
  }

  const nnapprox::SolveResult solved = nnapprox::run_solve(cfg);
  nnapprox::RunResult run;
  try {
    run = nnapprox::finish_run(solved, cfg.m);
  } catch (const std::exception& e) {
    nnapprox::atomic_write_file(dir / "trace.csv", nnapprox::trace_csv_string(solved.trace));
    std::cerr << "approximate: " << e.what() << '\n';
    return 1;
  }

  std::vector<std::string> outputs;
  write_run_files(dir, solved, run, outputs);

  json manifest{{"config", config_json(cfg)},
                {"timing",
                 {{"assemble_seconds", solved.timings.assemble_seconds},
                  {"solve_seconds", solved.timings.solve_seconds}}},
                {"solver_summary",
                 {{"selected_iter", run.approximant.selected_iter},
                  {"residual_norm", run.approximant.residual_norm},
                  {"max_epsilon", run.report.max_epsilon},
                  {"termination", nnapprox::to_string(solved.trace.terminated)},
                  {"support_sizes_attained", attained_support_sizes(solved.trace)}}}};
  write_manifest(dir, manifest, outputs);

  std::cout << "selected_iter=" << run.approximant.selected_iter
            << " residual_norm=" << run.approximant.residual_norm
            << " max_epsilon=" << run.report.max_epsilon << '\n';
  return 0;
}

int cmd_reference(const std::string& table_id, const std::string& out_dir) {
  const nnapprox::SparseApproximant ref = nnapprox::load_reference_params(table_id);
  const double alpha = nnapprox::reference_alpha(table_id);
  const std::string preset_name =
      table_id.rfind("table1", 0) == 0 ? "rational_power" : "expsum_stretched";
  const nnapprox::ExperimentConfig cfg = nnapprox::preset(preset_name, alpha, 10);
  const auto grid = nnapprox::build_grid(cfg.a, cfg.b, cfg.n, cfg.transform, cfg.weight);
  const nnapprox::ErrorReport report = nnapprox::error_curve(ref, grid, cfg.target);

  const fs::path dir(out_dir);
  fs::create_directories(dir);
  std::vector<std::string> outputs;
  nnapprox::atomic_write_file(dir / "params.csv", nnapprox::params_csv_string(ref));
  nnapprox::atomic_write_file(dir / "params.json",
                              nnapprox::params_json(ref, alpha).dump(2) + "\n");
  nnapprox::atomic_write_file(dir / "error_curve.csv",
                              nnapprox::error_curve_csv_string(report));
  outputs.push_back((dir / "params.csv").string());
  outputs.push_back((dir / "params.json").string());
  outputs.push_back((dir / "error_curve.csv").string());

  json manifest{{"table", table_id},
                {"config", config_json(cfg)},
                {"reference_residual_norm", report.residual_norm},
                {"max_epsilon", report.max_epsilon}};
  write_manifest(dir, manifest, outputs);

  std::cout << "table=" << table_id << " residual_norm=" << report.residual_norm
            << " max_epsilon=" << report.max_epsilon << '\n';
  return 0;
}

int cmd_sweep(CommonOpts opts, std::vector<int> m_list, std::vector<std::size_t> l_list) {
  if (m_list.size() > 1 && l_list.size() > 1) {
    std::cerr << "sweep: sweep over either m or l, not both\n";
    return 1;
  }
  if (m_list.empty() && l_list.empty()) {
    std::cerr << "sweep: provide --m or --l with one or more values\n";
    return 1;
  }
  // A single-valued list alongside a multi-valued one acts as an override.
  if (!m_list.empty() && l_list.size() == 1) {
    opts.l = l_list.front();
    l_list.clear();
  } else if (!l_list.empty() && m_list.size() == 1) {
    opts.m = m_list.front();
    m_list.clear();
  }
  const nnapprox::ExperimentConfig base = build_config(opts);
  const fs::path dir(opts.out_dir);
  fs::create_directories(dir);
  std::vector<std::string> outputs;

  const bool sweep_m = !m_list.empty();
  std::ostringstream summary;
  summary << (sweep_m ? "m" : "l") << ",selected_iter,residual_norm,max_epsilon\n";
  json rows = json::array();

  // Only m varies: the trace is m-independent, so solve once and reselect.
  std::optional<nnapprox::SolveResult> shared;
  if (sweep_m) shared = nnapprox::run_solve(base);

  const std::size_t count = sweep_m ? m_list.size() : l_list.size();
  for (std::size_t i = 0; i < count; ++i) {
    nnapprox::ExperimentConfig cfg = base;
    std::string label;
    if (sweep_m) {
      cfg.m = m_list[i];
      label = "m_" + std::to_string(m_list[i]);
    } else {
      cfg.l = l_list[i];
      label = "l_" + std::to_string(l_list[i]);
    }
    const std::string swept = sweep_m ? std::to_string(m_list[i]) : std::to_string(l_list[i]);
    try {
      const nnapprox::SolveResult& solved = sweep_m ? *shared : shared.emplace(nnapprox::run_solve(cfg));
      const nnapprox::RunResult run = nnapprox::finish_run(solved, cfg.m);
      write_run_files(dir / label, solved, run, outputs);
      char rn[32], me[32];
      std::snprintf(rn, sizeof(rn), "%.17g", run.approximant.residual_norm);
      std::snprintf(me, sizeof(me), "%.17g", run.report.max_epsilon);
      summary << swept << ',' << run.approximant.selected_iter << ',' << rn << ',' << me << '\n';
      rows.push_back({{"value", swept},
                      {"selected_iter", run.approximant.selected_iter},
                      {"residual_norm", run.approximant.residual_norm},
                      {"max_epsilon", run.report.max_epsilon}});
    } catch (const std::exception& e) {
      summary << swept << ",,,\n";
      rows.push_back({{"value", swept}, {"error", e.what()}});
      std::cerr << "sweep[" << swept << "]: " << e.what() << '\n';
    }
  }

  nnapprox::atomic_write_file(dir / "summary.csv", summary.str());
  outputs.push_back((dir / "summary.csv").string());
  json manifest{{"config", config_json(base)}, {"sweep", rows}};
  write_manifest(dir, manifest, outputs);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-negative sparse approximation by rational and exponential atoms"};
  app.require_subcommand(1);

  CommonOpts approx_opts;
  CLI::App* approximate = app.add_subcommand("approximate", "run one approximation");
  approximate->add_option("--m", approx_opts.m, "requested term count");
  add_common_options(approximate, approx_opts, true);

  std::string table_id, ref_out;
  CLI::App* reference =
      app.add_subcommand("reference", "evaluate a reference parameter set on its preset grid");
  reference->add_option("--table", table_id,
                        "table1_a25|table1_a50|table1_a75|table2_a25|table2_a50|table2_a75")
      ->required();
  reference->add_option("--out", ref_out, "output directory")->required();

  CommonOpts sweep_opts;
  std::vector<int> m_list;
  std::vector<std::size_t> l_list;
  CLI::App* sweep = app.add_subcommand("sweep", "sweep over m or l values");
  sweep->add_option("--m", m_list, "term counts to sweep");
  sweep->add_option("--l", l_list, "candidate counts to sweep");
  add_common_options(sweep, sweep_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (approximate->parsed()) return cmd_approximate(approx_opts);
    if (reference->parsed()) return cmd_reference(table_id, ref_out);
    if (sweep->parsed()) return cmd_sweep(sweep_opts, m_list, l_list);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
