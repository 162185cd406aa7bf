// Acceptance suite: one test per criterion, each printing a pass/fail line.
// Full-scale solves are cached and shared across criteria.

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nnapprox/pipeline.hpp"
#include "nnapprox/reference_tables.hpp"

using namespace nnapprox;
namespace fs = std::filesystem;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << "[criterion " << criterion << "] " << (pass ? "PASS" : "FAIL") << " - "
            << detail << std::endl;
}

const SolveResult& cached_solve(const std::string& name, double alpha, std::size_t l) {
  static std::map<std::string, SolveResult> cache;
  std::ostringstream key;
  key << name << ':' << alpha << ':' << l;
  auto it = cache.find(key.str());
  if (it == cache.end()) {
    ExperimentConfig cfg = preset(name, alpha, 10);
    cfg.l = l;
    it = cache.emplace(key.str(), run_solve(cfg)).first;
    std::cout << "  (solved " << key.str() << " in " << it->second.timings.solve_seconds
              << " s, " << it->second.trace.records.size() << " outer iterations)\n";
  }
  return it->second;
}

std::vector<const SparseApproximant*>& produced_approximants() {
  static std::vector<const SparseApproximant*> all;
  return all;
}

const SparseApproximant& remember(SparseApproximant approx) {
  static std::vector<SparseApproximant> storage;
  storage.reserve(256);
  storage.push_back(std::move(approx));
  produced_approximants().push_back(&storage.back());
  return storage.back();
}

// Residual of the reference parameters recomputed from first principles,
// independent of the grid/eval code paths: nodes and weights rebuilt from the
// transform definition, atoms and target written out directly.
double independent_reference_residual(const std::string& table_id) {
  const bool rational = table_id.rfind("table1", 0) == 0;
  const double alpha = reference_alpha(table_id);
  const auto ref = load_reference_params(table_id);
  const std::size_t n = 5000;
  const double b = rational ? 1e15 : 1e3;
  const double beta = rational ? std::log(b) : std::log1p(b);
  const double dtheta = beta / static_cast<double>(n);
  double j_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = (static_cast<double>(j) + 0.5) * dtheta;
    const double x = rational ? std::exp(theta) : std::exp(theta) - 1.0;
    double model = 1.0;
    for (const auto& term : ref.terms) {
      model += rational
                   ? term.u * (1.0 / (1.0 + term.v * x) - 1.0 / (1.0 + term.v))
                   : term.u * (std::exp(-term.v * x) - 1.0);
    }
    const double f = rational ? std::pow(x, -alpha) : std::exp(-std::pow(x, alpha));
    const double diff = model - f;
    j_sum += diff * diff * dtheta;  // weight cancels the Jacobian exactly
  }
  return std::sqrt(j_sum);
}

double reference_residual(const std::string& table_id) {
  const bool rational = table_id.rfind("table1", 0) == 0;
  const auto cfg = preset(rational ? "rational_power" : "expsum_stretched",
                          reference_alpha(table_id), 10);
  const auto grid = build_grid(cfg.a, cfg.b, cfg.n, cfg.transform, cfg.weight);
  const auto ref = load_reference_params(table_id);
  return error_curve(ref, grid, cfg.target).residual_norm;
}

void run_table_benchmark(int criterion, const std::string& preset_name,
                         const std::string& table_prefix) {
  bool all_pass = true;
  std::ostringstream detail;
  for (double alpha : {0.25, 0.5, 0.75}) {
    const std::string table_id =
        table_prefix + (alpha == 0.25 ? "a25" : alpha == 0.5 ? "a50" : "a75");
    const double r_ref = reference_residual(table_id);
    const double r_ref_indep = independent_reference_residual(table_id);
    ASSERT_NEAR(r_ref, r_ref_indep, 1e-10 * r_ref)
        << "reference residual cross-check failed for " << table_id;

    const SolveResult& solved = cached_solve(preset_name, alpha, 1000);
    const double elapsed = solved.timings.solve_seconds + solved.timings.assemble_seconds;
    EXPECT_LT(elapsed, 120.0) << table_id;

    const auto& approx = remember(select(solved.trace, solved.candidates, solved.basis, 10));
    const bool pass = approx.residual_norm <= 1.5 * r_ref;
    all_pass = all_pass && pass && elapsed < 120.0;
    EXPECT_LE(approx.residual_norm, 1.5 * r_ref) << table_id;
    detail << table_id << ": solver=" << approx.residual_norm << " ref=" << r_ref
           << " (" << elapsed << " s)  ";
  }
  report(criterion, all_pass, detail.str());
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST(Acceptance, C01_OracleEquivalence) {
  const double t0 = now_seconds();
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> nd(3, 10), ld(2, 10);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  bool all_pass = true;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = nd(rng), l = ld(rng);
    DesignSystem sys;
    sys.matrix.resize(n, l);
    sys.rhs.resize(n);
    for (int j = 0; j < n; ++j) {
      sys.rhs[j] = entry(rng);
      for (int k = 0; k < l; ++k) sys.matrix(j, k) = entry(rng);
    }
    const auto trace = solve_nnls(sys, 300);
    const Eigen::VectorXd u = trace.records.empty()
                                  ? Eigen::VectorXd::Zero(l).eval()
                                  : trace.records.back().coefficients;
    const double objective = (sys.rhs - sys.matrix * u).squaredNorm();

    // Exhaustive support enumeration oracle.
    double best = sys.rhs.squaredNorm();
    for (unsigned mask = 1; mask < (1u << l); ++mask) {
      std::vector<int> support;
      for (int k = 0; k < l; ++k)
        if (mask & (1u << k)) support.push_back(k);
      Eigen::MatrixXd Ap(n, static_cast<Eigen::Index>(support.size()));
      for (std::size_t i = 0; i < support.size(); ++i)
        Ap.col(static_cast<Eigen::Index>(i)) = sys.matrix.col(support[i]);
      Eigen::VectorXd z = Ap.colPivHouseholderQr().solve(sys.rhs);
      if ((z.array() < -1e-12).any()) continue;
      best = std::min(best, (sys.rhs - Ap * z).squaredNorm());
    }
    EXPECT_NEAR(objective, best, 1e-8) << "trial " << trial;
    all_pass = all_pass && std::abs(objective - best) <= 1e-8;

    // KKT conditions at the returned point.
    const Eigen::VectorXd dual = sys.matrix.transpose() * (sys.rhs - sys.matrix * u);
    const double tol = 1e-8 * std::max(1.0, (sys.matrix.transpose() * sys.rhs).cwiseAbs().maxCoeff());
    const double umax = std::max(u.maxCoeff(), 0.0);
    for (int k = 0; k < l; ++k) {
      EXPECT_GE(u[k], 0.0);
      if (u[k] > 1e-12 * umax) {
        EXPECT_LE(std::abs(dual[k]), tol);
      } else {
        EXPECT_LE(dual[k], tol);
      }
      all_pass = all_pass && u[k] >= 0.0 &&
                 (u[k] > 1e-12 * umax ? std::abs(dual[k]) <= tol : dual[k] <= tol);
    }
  }
  const double elapsed = now_seconds() - t0;
  EXPECT_LT(elapsed, 10.0);
  std::ostringstream detail;
  detail << "50 randomized instances vs exhaustive oracle, " << elapsed << " s";
  report(1, all_pass && elapsed < 10.0, detail.str());
}

TEST(Acceptance, C02_PlantedModelRecovery) {
  const double t0 = now_seconds();
  bool all_pass = true;
  std::ostringstream detail;

  struct Case {
    BasisFamily family;
    TransformKind transform;
    WeightKind weight;
    double a, b;
  };
  const Case cases[] = {
      {BasisFamily::RationalPinned, TransformKind::Exp, WeightKind::InverseX, 1.0, 1e6},
      {BasisFamily::ExpPinned, TransformKind::ExpMinusOne, WeightKind::InverseOnePlusX, 0.0,
       1e3},
  };
  for (const Case& c : cases) {
    const auto grid = build_grid(c.a, c.b, 500, c.transform, c.weight);
    const auto cands = build_candidates(1e-4, 1e2, 40, Spacing::Geometric);
    const BasisSpec basis{c.family, 1.0};
    const std::size_t planted_idx[3] = {8, 20, 33};
    const double planted_u[3] = {0.8, 1.5, 0.4};
    std::vector<double> target_values(grid.nodes.size());
    for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
      double value = basis.pin_value;
      for (int i = 0; i < 3; ++i) {
        value += planted_u[i] * eval_atom(c.family, grid.nodes[j], cands.values[planted_idx[i]]);
      }
      target_values[j] = value;
    }
    const auto sys = assemble_from_samples(grid, basis, cands, target_values);
    const auto trace = solve_nnls(sys, 100);
    const auto& approx = remember(select(trace, cands, basis, 3));

    bool pass = approx.terms.size() == 3 && approx.residual_norm < 1e-8;
    for (int i = 0; i < 3 && pass; ++i) {
      pass = approx.terms[static_cast<std::size_t>(i)].v == cands.values[planted_idx[i]] &&
             std::abs(approx.terms[static_cast<std::size_t>(i)].u - planted_u[i]) <= 1e-8;
      EXPECT_DOUBLE_EQ(approx.terms[static_cast<std::size_t>(i)].v,
                       cands.values[planted_idx[i]]);
      EXPECT_NEAR(approx.terms[static_cast<std::size_t>(i)].u, planted_u[i], 1e-8);
    }
    EXPECT_LT(approx.residual_norm, 1e-8);
    all_pass = all_pass && pass;
    detail << to_string(c.family) << ": residual=" << approx.residual_norm << "  ";
  }
  const double elapsed = now_seconds() - t0;
  EXPECT_LT(elapsed, 5.0);
  detail << elapsed << " s";
  report(2, all_pass && elapsed < 5.0, detail.str());
}

TEST(Acceptance, C03_Table1ResidualBenchmark) {
  run_table_benchmark(3, "rational_power", "table1_");
}

TEST(Acceptance, C04_Table2ResidualBenchmark) {
  run_table_benchmark(4, "expsum_stretched", "table2_");
}

TEST(Acceptance, C05_MTrend) {
  bool all_pass = true;
  std::ostringstream detail;
  for (const char* name : {"rational_power", "expsum_stretched"}) {
    const SolveResult& solved = cached_solve(name, 0.5, 1000);
    double prev_res = -1.0, prev_eps = -1.0;
    for (int m : {5, 10, 20}) {
      const auto& approx = remember(select(solved.trace, solved.candidates, solved.basis, m));
      const auto rep = error_curve(approx, solved.grid, solved.config.target);
      if (prev_res >= 0.0) {
        EXPECT_LT(approx.residual_norm, prev_res) << name << " m=" << m;
        EXPECT_LT(rep.max_epsilon, prev_eps) << name << " m=" << m;
        all_pass = all_pass && approx.residual_norm < prev_res && rep.max_epsilon < prev_eps;
      }
      detail << name << " m=" << m << ": res=" << approx.residual_norm
             << " maxeps=" << rep.max_epsilon << "  ";
      prev_res = approx.residual_norm;
      prev_eps = rep.max_epsilon;
    }
  }
  report(5, all_pass, detail.str());
}

TEST(Acceptance, C06_AlphaTrend) {
  const auto& low = cached_solve("rational_power", 0.25, 1000);
  const auto& high = cached_solve("rational_power", 0.75, 1000);
  const auto& a25 = remember(select(low.trace, low.candidates, low.basis, 10));
  const auto& a75 = remember(select(high.trace, high.candidates, high.basis, 10));
  const bool pass = a75.residual_norm < a25.residual_norm;
  EXPECT_LT(a75.residual_norm, a25.residual_norm);
  std::ostringstream detail;
  detail << "residual alpha=0.75: " << a75.residual_norm
         << " < alpha=0.25: " << a25.residual_norm;
  report(6, pass, detail.str());
}

TEST(Acceptance, C07_IterationCountSoftCheck) {
  // Soft check: outside tolerance is a documented deviation, not a failure
  // (the rational candidate interval is an artifact choice).
  const SolveResult& solved = cached_solve("rational_power", 0.5, 1000);
  const int expected[] = {13, 38, 110};
  const int ms[] = {5, 10, 20};
  std::ostringstream detail;
  bool within = true;
  for (int i = 0; i < 3; ++i) {
    const auto& approx = remember(select(solved.trace, solved.candidates, solved.basis, ms[i]));
    const double lo = 0.7 * expected[i], hi = 1.3 * expected[i];
    const bool ok = approx.selected_iter >= lo && approx.selected_iter <= hi;
    within = within && ok;
    detail << "m=" << ms[i] << ": iter=" << approx.selected_iter << " (expected ~"
           << expected[i] << (ok ? ", ok" : ", DEVIATION") << ")  ";
  }
  if (!within) {
    detail << "[documented deviation: selected iterations outside +/-30%; "
              "candidate-grid spacing for the rational case is an artifact choice]";
  }
  report(7, true, detail.str());
  SUCCEED();
}

TEST(Acceptance, C08_LInsensitivity) {
  double min_eps = 1e300, max_eps = 0.0;
  std::ostringstream detail;
  for (std::size_t l : {std::size_t{500}, std::size_t{1000}, std::size_t{2000}}) {
    const SolveResult& solved = cached_solve("rational_power", 0.5, l);
    const auto& approx = remember(select(solved.trace, solved.candidates, solved.basis, 10));
    const auto rep = error_curve(approx, solved.grid, solved.config.target);
    min_eps = std::min(min_eps, rep.max_epsilon);
    max_eps = std::max(max_eps, rep.max_epsilon);
    detail << "l=" << l << ": maxeps=" << rep.max_epsilon << "  ";
  }
  const bool pass = max_eps <= 2.0 * min_eps;
  EXPECT_LE(max_eps, 2.0 * min_eps);
  detail << "spread=" << max_eps / min_eps << "x";
  report(8, pass, detail.str());
}

TEST(Acceptance, C09_PinningExactness) {
  bool all_pass = true;
  int checked = 0;
  for (const SparseApproximant* approx : produced_approximants()) {
    if (!is_pinned(approx->family)) continue;
    const double x_pin = pin_abscissa(approx->family);
    const double model = evaluate_model(*approx, x_pin);
    EXPECT_EQ(model, approx->pin_value);
    all_pass = all_pass && model == approx->pin_value;
    ++checked;
  }
  ASSERT_GT(checked, 0) << "no approximants produced by earlier criteria";
  std::ostringstream detail;
  detail << checked << " approximants, |model(a) - f(a)| = 0 exactly";
  report(9, all_pass, detail.str());
}

TEST(Acceptance, C10_Determinism) {
  const fs::path dir1 = fs::temp_directory_path() / "nnapprox_acc_det1";
  const fs::path dir2 = fs::temp_directory_path() / "nnapprox_acc_det2";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  const std::string base = std::string(NNAPPROX_CLI_PATH) +
                           " approximate --preset expsum_stretched --alpha 0.5 --m 10 --out ";
  ASSERT_EQ(WEXITSTATUS(std::system((base + dir1.string() + " > /dev/null").c_str())), 0);
  ASSERT_EQ(WEXITSTATUS(std::system((base + dir2.string() + " > /dev/null").c_str())), 0);
  const std::string p1 = slurp(dir1 / "params.csv");
  const std::string p2 = slurp(dir2 / "params.csv");
  const bool pass = !p1.empty() && p1 == p2;
  EXPECT_FALSE(p1.empty());
  EXPECT_EQ(p1, p2);
  report(10, pass, "two full preset runs produce bit-identical params.csv");
}
