#ifndef NNAPPROX_NNLS_HPP
#define NNAPPROX_NNLS_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nnapprox/design.hpp"

namespace nnapprox {

/// Snapshot taken after one completed outer iteration of the active-set loop.
struct IterationRecord {
  int iter = 0;  // 1-based outer iteration index
  double residual_norm = 0.0;
  int support_size = 0;  // entries of coefficients above the zero threshold
  Eigen::VectorXd coefficients;
  bool degenerate = false;  // rank trouble hit in the restricted solve
};

enum class TerminationReason { KktSatisfied, MaxIterations };

inline const char* to_string(TerminationReason r) {
  return r == TerminationReason::KktSatisfied ? "kkt_satisfied" : "max_iterations";
}

struct NnlsTrace {
  std::vector<IterationRecord> records;
  TerminationReason terminated = TerminationReason::MaxIterations;
  bool stalled = false;     // solver stopped because no progress was possible
  double zero_tol = 1e-12;  // relative threshold used for support counting
};

namespace detail {

inline Eigen::VectorXd restricted_least_squares(const Eigen::MatrixXd& A,
                                                const Eigen::VectorXd& b,
                                                const std::vector<int>& support,
                                                bool* degenerate) {
  const auto p = static_cast<Eigen::Index>(support.size());
  Eigen::MatrixXd Ap(A.rows(), p);
  for (Eigen::Index i = 0; i < p; ++i) {
    Ap.col(i) = A.col(support[static_cast<std::size_t>(i)]);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Ap);
  if (degenerate != nullptr) {
    *degenerate = qr.rank() < p;
  }
  Eigen::VectorXd zp = qr.solve(b);
  Eigen::VectorXd z = Eigen::VectorXd::Zero(A.cols());
  for (Eigen::Index i = 0; i < p; ++i) {
    z[support[static_cast<std::size_t>(i)]] = zp[i];
  }
  return z;
}

inline int count_support(const Eigen::VectorXd& u, double zero_tol) {
  const double umax = u.size() > 0 ? u.maxCoeff() : 0.0;
  if (umax <= 0.0) return 0;
  const double thresh = zero_tol * umax;
  int m = 0;
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    if (u[k] > thresh) ++m;
  }
  return m;
}

}  // namespace detail

/// Unconstrained least squares restricted to the given columns, via a
/// rank-revealing orthogonal factorization. Off-support entries are zero.
inline Eigen::VectorXd solve_restricted(const DesignSystem& system,
                                        const std::vector<int>& support,
                                        bool* degenerate = nullptr) {
  if (support.empty()) {
    throw std::invalid_argument("solve_restricted: empty support");
  }
  for (int k : support) {
    if (k < 0 || k >= system.matrix.cols()) {
      throw std::invalid_argument("solve_restricted: support index out of range");
    }
  }
  return detail::restricted_least_squares(system.matrix, system.rhs, support, degenerate);
}

/// Lawson-Hanson active-set NNLS with a per-outer-iteration trace.
///
/// Outer loop: promote the zero-set index with the largest positive dual
/// component (lowest index on ties). Inner loop: solve the restricted least
/// squares problem on the passive set; while any passive coefficient is
/// non-positive, step by the largest feasible fraction and demote vanished
/// indices. zero_tol and kkt_tol are relative (to the largest coefficient
/// and to ||A^T b||_inf respectively).
inline NnlsTrace solve_nnls(const DesignSystem& system, int max_outer = 500,
                            double zero_tol = 1e-12, double kkt_tol = 1e-10) {
  if (max_outer < 1) throw std::invalid_argument("solve_nnls: requires max_outer >= 1");
  if (!(zero_tol > 0.0)) throw std::invalid_argument("solve_nnls: requires zero_tol > 0");
  if (!(kkt_tol > 0.0)) throw std::invalid_argument("solve_nnls: requires kkt_tol > 0");

  const Eigen::MatrixXd& A = system.matrix;
  const Eigen::VectorXd& b = system.rhs;
  const auto l = A.cols();

  NnlsTrace trace;
  trace.zero_tol = zero_tol;
  trace.terminated = TerminationReason::MaxIterations;

  const double dual_scale = (A.transpose() * b).cwiseAbs().maxCoeff();
  const double kkt_abs = kkt_tol * dual_scale;

  Eigen::VectorXd u = Eigen::VectorXd::Zero(l);
  std::vector<char> passive(static_cast<std::size_t>(l), 0);
  std::vector<int> support;  // passive indices in promotion order

  for (int outer = 1; outer <= max_outer; ++outer) {
    const Eigen::VectorXd residual = b - A * u;
    const Eigen::VectorXd dual = A.transpose() * residual;

    int t = -1;
    double best = kkt_abs;
    for (Eigen::Index k = 0; k < l; ++k) {
      if (!passive[static_cast<std::size_t>(k)] && dual[k] > best) {
        best = dual[k];
        t = static_cast<int>(k);
      }
    }
    if (t < 0) {
      trace.terminated = TerminationReason::KktSatisfied;
      break;
    }

    const Eigen::VectorXd u_before = u;
    passive[static_cast<std::size_t>(t)] = 1;
    support.push_back(t);
    bool degenerate_iter = false;

    while (!support.empty()) {
      bool deg = false;
      Eigen::VectorXd z = detail::restricted_least_squares(A, b, support, &deg);
      if (deg) {
        degenerate_iter = true;
        const int last = support.back();
        support.pop_back();
        passive[static_cast<std::size_t>(last)] = 0;
        u[last] = 0.0;
        continue;
      }

      bool feasible = true;
      for (int k : support) {
        if (z[k] <= 0.0) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        u.setZero();
        for (int k : support) u[k] = z[k];
        break;
      }

      // Largest feasible step toward z; the blocking index lands exactly on 0.
      double alpha = 1.0;
      int blocking = -1;
      for (int k : support) {
        if (z[k] <= 0.0) {
          const double step = u[k] / (u[k] - z[k]);
          if (step < alpha) {
            alpha = step;
            blocking = k;
          }
        }
      }
      for (int k : support) u[k] += alpha * (z[k] - u[k]);
      if (blocking >= 0) u[blocking] = 0.0;
      support.erase(std::remove_if(support.begin(), support.end(),
                                   [&](int k) {
                                     if (u[k] <= 0.0) {
                                       u[k] = 0.0;
                                       passive[static_cast<std::size_t>(k)] = 0;
                                       return true;
                                     }
                                     return false;
                                   }),
                    support.end());
    }

    IterationRecord rec;
    rec.iter = outer;
    rec.residual_norm = (b - A * u).norm();
    rec.support_size = detail::count_support(u, zero_tol);
    rec.coefficients = u;
    rec.degenerate = degenerate_iter;
    trace.records.push_back(std::move(rec));

    if (u == u_before) {
      // The promoted column was immediately demoted and nothing moved;
      // repeating the outer loop would pick the same index forever.
      trace.stalled = true;
      trace.terminated = TerminationReason::MaxIterations;
      break;
    }
  }
  return trace;
}

}  // namespace nnapprox

#endif  // NNAPPROX_NNLS_HPP
