#ifndef NNAPPROX_EVAL_HPP
#define NNAPPROX_EVAL_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "nnapprox/dictionary.hpp"
#include "nnapprox/grid.hpp"
#include "nnapprox/selector.hpp"

namespace nnapprox {

/// Pointwise accuracy eps(x_j) = |model(x_j) - f(x_j)| and the weighted
/// residual norm over a grid.
struct ErrorReport {
  std::vector<double> nodes;
  std::vector<double> epsilon;
  double max_epsilon = 0.0;
  double residual_norm = 0.0;  // sqrt( sum_j w_j (model(x_j) - f(x_j))^2 )
};

inline ErrorReport error_curve(const SparseApproximant& approx, const QuadratureGrid& grid,
                               const TargetFunction& target) {
  ErrorReport report;
  report.nodes = grid.nodes;
  report.epsilon.reserve(grid.nodes.size());
  double j_sum = 0.0;
  for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
    const double x = grid.nodes[j];
    const double diff = evaluate_model(approx, x) - eval_target(target, x);
    const double eps = std::abs(diff);
    report.epsilon.push_back(eps);
    report.max_epsilon = std::max(report.max_epsilon, eps);
    j_sum += grid.weights[j] * diff * diff;
  }
  report.residual_norm = std::sqrt(j_sum);
  return report;
}

}  // namespace nnapprox

#endif  // NNAPPROX_EVAL_HPP
