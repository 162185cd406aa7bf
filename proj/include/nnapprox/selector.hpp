#ifndef NNAPPROX_SELECTOR_HPP
#define NNAPPROX_SELECTOR_HPP

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "nnapprox/dictionary.hpp"
#include "nnapprox/nnls.hpp"

namespace nnapprox {

struct Term {
  double u = 0.0;  // linear coefficient, > 0
  double v = 0.0;  // nonlinear parameter, from the candidate set
};

/// Sparse m-term approximant extracted from a solver iteration:
/// model(x) = pin_value + sum_i u_i * phi(x, v_i), terms sorted by ascending v.
struct SparseApproximant {
  std::vector<Term> terms;
  double pin_value = 0.0;
  BasisFamily family = BasisFamily::RationalPinned;
  int selected_iter = -1;
  double residual_norm = 0.0;
};

/// Picks the outer iteration whose support size equals m with minimal
/// residual (earliest iteration on ties) and extracts the positive entries.
inline SparseApproximant select(const NnlsTrace& trace, const CandidateSet& candidates,
                                const BasisSpec& basis, int m) {
  if (m < 1) throw std::invalid_argument("select: requires m >= 1");
  if (trace.records.empty()) throw std::invalid_argument("select: empty trace");

  const IterationRecord* chosen = nullptr;
  std::set<int> attained;
  for (const IterationRecord& rec : trace.records) {
    attained.insert(rec.support_size);
    if (rec.support_size == m &&
        (chosen == nullptr || rec.residual_norm < chosen->residual_norm)) {
      chosen = &rec;
    }
  }
  if (chosen == nullptr) {
    std::ostringstream msg;
    msg << "select: no iteration attained support size " << m
        << "; attained sizes:";
    for (int s : attained) msg << ' ' << s;
    msg << " (raise max_outer or change m)";
    throw std::runtime_error(msg.str());
  }

  SparseApproximant approx;
  approx.pin_value = basis.pin_value;
  approx.family = basis.tag;
  approx.selected_iter = chosen->iter;
  approx.residual_norm = chosen->residual_norm;

  const double umax = chosen->coefficients.maxCoeff();
  const double thresh = trace.zero_tol * umax;
  for (Eigen::Index k = 0; k < chosen->coefficients.size(); ++k) {
    const double u = chosen->coefficients[k];
    if (u > thresh) {
      approx.terms.push_back(Term{u, candidates.values[static_cast<std::size_t>(k)]});
    }
  }
  // Candidate values are ascending, so terms already come out sorted by v.
  return approx;
}

inline double evaluate_model(const SparseApproximant& approx, double x) {
  double value = approx.pin_value;
  for (const Term& t : approx.terms) {
    value += t.u * eval_atom(approx.family, x, t.v);
  }
  return value;
}

}  // namespace nnapprox

#endif  // NNAPPROX_SELECTOR_HPP
