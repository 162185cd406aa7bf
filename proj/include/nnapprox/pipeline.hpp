#ifndef NNAPPROX_PIPELINE_HPP
#define NNAPPROX_PIPELINE_HPP

#include <chrono>

#include "nnapprox/design.hpp"
#include "nnapprox/dictionary.hpp"
#include "nnapprox/eval.hpp"
#include "nnapprox/grid.hpp"
#include "nnapprox/nnls.hpp"
#include "nnapprox/presets.hpp"
#include "nnapprox/selector.hpp"

namespace nnapprox {

struct StageTimings {
  double assemble_seconds = 0.0;
  double solve_seconds = 0.0;
  double select_seconds = 0.0;
};

/// Grid, dictionary and solver trace for one configuration. The requested
/// term count m is a pure post-hoc selection parameter, so one SolveResult
/// can serve several m values.
struct SolveResult {
  ExperimentConfig config;
  QuadratureGrid grid;
  CandidateSet candidates;
  BasisSpec basis;
  NnlsTrace trace;
  StageTimings timings;
};

struct RunResult {
  SparseApproximant approximant;
  ErrorReport report;
};

inline SolveResult run_solve(const ExperimentConfig& cfg) {
  using clock = std::chrono::steady_clock;
  SolveResult result;
  result.config = cfg;

  const auto t0 = clock::now();
  result.grid = build_grid(cfg.a, cfg.b, cfg.n, cfg.transform, cfg.weight);
  result.candidates = build_candidates(cfg.c, cfg.d, cfg.l, cfg.spacing);
  result.basis = make_basis(cfg.family, cfg.target);
  const DesignSystem system = assemble(result.grid, result.basis, result.candidates, cfg.target);
  const auto t1 = clock::now();
  result.trace = solve_nnls(system, cfg.max_outer);
  const auto t2 = clock::now();

  result.timings.assemble_seconds = std::chrono::duration<double>(t1 - t0).count();
  result.timings.solve_seconds = std::chrono::duration<double>(t2 - t1).count();
  return result;
}

inline RunResult finish_run(const SolveResult& solved, int m) {
  RunResult run;
  run.approximant = select(solved.trace, solved.candidates, solved.basis, m);
  run.report = error_curve(run.approximant, solved.grid, solved.config.target);
  return run;
}

inline RunResult run_experiment(const ExperimentConfig& cfg) {
  return finish_run(run_solve(cfg), cfg.m);
}

}  // namespace nnapprox

#endif  // NNAPPROX_PIPELINE_HPP
