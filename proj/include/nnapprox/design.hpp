#ifndef NNAPPROX_DESIGN_HPP
#define NNAPPROX_DESIGN_HPP

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nnapprox/dictionary.hpp"
#include "nnapprox/grid.hpp"

namespace nnapprox {

/// Weighted linear least squares system: the quadrature measure is folded
/// into the rows via sqrt(w_j), so ||rhs - matrix*u||^2 equals the
/// discretized residual functional for every u.
struct DesignSystem {
  Eigen::MatrixXd matrix;  // n x l, (j,k) = sqrt(w_j) * phi(x_j, v_k)
  Eigen::VectorXd rhs;     // sqrt(w_j) * (f(x_j) - pin_value)
  QuadratureGrid grid;
  CandidateSet candidates;
  BasisSpec basis;
  std::optional<TargetFunction> target;  // absent for sample-based assembly
};

namespace detail {

inline void check_family_domain(const BasisSpec& basis, const QuadratureGrid& grid) {
  const double x_min = grid.nodes.empty() ? 0.0 : grid.nodes.front();
  if ((basis.tag == BasisFamily::RationalPinned) && x_min < 1.0) {
    throw std::invalid_argument(
        "assemble: rational_pinned family requires grid nodes with x >= 1");
  }
  if ((basis.tag == BasisFamily::RationalRaw || basis.tag == BasisFamily::ExpRaw ||
       basis.tag == BasisFamily::ExpPinned) &&
      x_min < 0.0) {
    throw std::invalid_argument("assemble: family requires grid nodes with x >= 0");
  }
}

inline DesignSystem assemble_core(const QuadratureGrid& grid, const BasisSpec& basis,
                                  const CandidateSet& candidates,
                                  const std::vector<double>& target_values) {
  if (grid.nodes.empty()) throw std::invalid_argument("assemble: empty grid");
  if (candidates.values.empty()) throw std::invalid_argument("assemble: empty candidate set");
  if (target_values.size() != grid.nodes.size()) {
    throw std::invalid_argument("assemble: target sample count does not match grid");
  }
  check_family_domain(basis, grid);

  const auto n = static_cast<Eigen::Index>(grid.nodes.size());
  const auto l = static_cast<Eigen::Index>(candidates.values.size());

  DesignSystem sys;
  sys.grid = grid;
  sys.candidates = candidates;
  sys.basis = basis;
  sys.matrix.resize(n, l);
  sys.rhs.resize(n);

  Eigen::VectorXd sqrt_w(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    sqrt_w[j] = std::sqrt(grid.weights[static_cast<std::size_t>(j)]);
    sys.rhs[j] = sqrt_w[j] * (target_values[static_cast<std::size_t>(j)] - basis.pin_value);
  }
  for (Eigen::Index k = 0; k < l; ++k) {
    const double v = candidates.values[static_cast<std::size_t>(k)];
    for (Eigen::Index j = 0; j < n; ++j) {
      sys.matrix(j, k) =
          sqrt_w[j] * eval_atom(basis.tag, grid.nodes[static_cast<std::size_t>(j)], v);
    }
    if (sys.matrix.col(k).squaredNorm() == 0.0) {
      throw std::invalid_argument("assemble: candidate atom yields an identically zero column");
    }
  }
  return sys;
}

}  // namespace detail

inline DesignSystem assemble(const QuadratureGrid& grid, const BasisSpec& basis,
                             const CandidateSet& candidates, const TargetFunction& target) {
  std::vector<double> f(grid.nodes.size());
  for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
    f[j] = eval_target(target, grid.nodes[j]);
  }
  DesignSystem sys = detail::assemble_core(grid, basis, candidates, f);
  sys.target = target;
  return sys;
}

/// Assembly from precomputed target samples at the grid nodes. Used for
/// synthetic targets built from known atoms.
inline DesignSystem assemble_from_samples(const QuadratureGrid& grid, const BasisSpec& basis,
                                          const CandidateSet& candidates,
                                          const std::vector<double>& target_values) {
  return detail::assemble_core(grid, basis, candidates, target_values);
}

}  // namespace nnapprox

#endif  // NNAPPROX_DESIGN_HPP
