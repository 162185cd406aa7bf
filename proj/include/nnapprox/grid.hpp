#ifndef NNAPPROX_GRID_HPP
#define NNAPPROX_GRID_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnapprox {

/// Monotone change of variable x = x(theta) used to place grid nodes.
enum class TransformKind {
  Identity,     // x = theta
  Exp,          // x = exp(theta), requires a >= 1
  ExpMinusOne,  // x = exp(theta) - 1, requires a >= 0
};

/// Weight function rho(x) of the weighted L2 norm.
enum class WeightKind {
  Unit,             // rho(x) = 1
  InverseX,         // rho(x) = 1/x
  InverseOnePlusX,  // rho(x) = 1/(1+x)
};

inline const char* to_string(TransformKind t) {
  switch (t) {
    case TransformKind::Identity: return "identity";
    case TransformKind::Exp: return "exp";
    case TransformKind::ExpMinusOne: return "exp_minus_one";
  }
  return "?";
}

inline const char* to_string(WeightKind w) {
  switch (w) {
    case WeightKind::Unit: return "unit";
    case WeightKind::InverseX: return "inverse_x";
    case WeightKind::InverseOnePlusX: return "inverse_one_plus_x";
  }
  return "?";
}

inline TransformKind transform_from_string(const std::string& s) {
  if (s == "identity") return TransformKind::Identity;
  if (s == "exp") return TransformKind::Exp;
  if (s == "exp_minus_one") return TransformKind::ExpMinusOne;
  throw std::invalid_argument("unknown transform: " + s);
}

inline WeightKind weight_from_string(const std::string& s) {
  if (s == "unit") return WeightKind::Unit;
  if (s == "inverse_x") return WeightKind::InverseX;
  if (s == "inverse_one_plus_x") return WeightKind::InverseOnePlusX;
  throw std::invalid_argument("unknown weight: " + s);
}

/// Midpoint-rule grid discretizing the weighted residual functional on [a, b].
/// Nodes are images of equispaced midpoints in the transformed variable theta;
/// weights carry both the weight function and the transform Jacobian.
struct QuadratureGrid {
  std::vector<double> nodes;    // x_j, strictly increasing, in (a, b)
  std::vector<double> weights;  // w_j = rho(x_j) * dx/dtheta(theta_j) * dtheta
  std::size_t n = 0;
  double a = 0.0;
  double b = 0.0;
  double beta = 0.0;  // length of the theta-interval
  TransformKind transform = TransformKind::Identity;
  WeightKind weight = WeightKind::Unit;
};

namespace detail {

inline double to_theta(TransformKind t, double x) {
  switch (t) {
    case TransformKind::Identity: return x;
    case TransformKind::Exp: return std::log(x);
    case TransformKind::ExpMinusOne: return std::log1p(x);
  }
  return 0.0;
}

inline double from_theta(TransformKind t, double theta) {
  switch (t) {
    case TransformKind::Identity: return theta;
    case TransformKind::Exp: return std::exp(theta);
    case TransformKind::ExpMinusOne: return std::expm1(theta);
  }
  return 0.0;
}

inline double jacobian(TransformKind t, double theta) {
  switch (t) {
    case TransformKind::Identity: return 1.0;
    case TransformKind::Exp: return std::exp(theta);
    case TransformKind::ExpMinusOne: return std::exp(theta);
  }
  return 0.0;
}

inline double weight_value(WeightKind w, double x) {
  switch (w) {
    case WeightKind::Unit: return 1.0;
    case WeightKind::InverseX: return 1.0 / x;
    case WeightKind::InverseOnePlusX: return 1.0 / (1.0 + x);
  }
  return 0.0;
}

// Pairs for which rho(x) cancels the Jacobian exactly, giving w_j = dtheta.
inline bool weight_cancels_jacobian(TransformKind t, WeightKind w) {
  return (t == TransformKind::Exp && w == WeightKind::InverseX) ||
         (t == TransformKind::ExpMinusOne && w == WeightKind::InverseOnePlusX);
}

}  // namespace detail

inline QuadratureGrid build_grid(double a, double b, std::size_t n,
                                 TransformKind transform, WeightKind weight) {
  if (!(a < b)) {
    throw std::invalid_argument("build_grid: requires a < b");
  }
  if (n < 1) {
    throw std::invalid_argument("build_grid: requires n >= 1");
  }
  if (transform == TransformKind::Exp && a < 1.0) {
    throw std::invalid_argument(
        "build_grid: exp transform requires a >= 1 (theta = ln x >= 0)");
  }
  if (transform == TransformKind::ExpMinusOne && a < 0.0) {
    throw std::invalid_argument(
        "build_grid: exp_minus_one transform requires a >= 0 (theta = ln(1+x) >= 0)");
  }

  QuadratureGrid g;
  g.n = n;
  g.a = a;
  g.b = b;
  g.transform = transform;
  g.weight = weight;

  const double theta_a = detail::to_theta(transform, a);
  const double theta_b = detail::to_theta(transform, b);
  g.beta = theta_b - theta_a;
  const double dtheta = g.beta / static_cast<double>(n);
  const bool exact = detail::weight_cancels_jacobian(transform, weight);

  g.nodes.reserve(n);
  g.weights.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = theta_a + (static_cast<double>(j) + 0.5) * dtheta;
    const double x = detail::from_theta(transform, theta);
    if (weight == WeightKind::InverseX && x <= 0.0) {
      throw std::invalid_argument(
          "build_grid: inverse_x weight requires x > 0 over the grid");
    }
    const double w = exact ? dtheta
                           : detail::weight_value(weight, x) *
                                 detail::jacobian(transform, theta) * dtheta;
    g.nodes.push_back(x);
    g.weights.push_back(w);
  }
  return g;
}

}  // namespace nnapprox

#endif  // NNAPPROX_GRID_HPP
