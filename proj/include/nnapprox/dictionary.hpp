#ifndef NNAPPROX_DICTIONARY_HPP
#define NNAPPROX_DICTIONARY_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnapprox {

/// Parametric atom families phi(x, v). Pinned variants subtract the raw
/// atom's value at the pin abscissa, so they vanish there exactly.
enum class BasisFamily {
  RationalRaw,     // 1 / (1 + v x)
  ExpRaw,          // exp(-v x)
  RationalPinned,  // 1/(1 + v x) - 1/(1 + v), vanishes at x = 1
  ExpPinned,       // exp(-v x) - 1, vanishes at x = 0
};

enum class TargetKind {
  PowerNeg,      // f(x) = x^{-alpha}, x >= 1
  StretchedExp,  // f(x) = exp(-x^alpha), x >= 0
};

enum class Spacing { Geometric, Uniform };

inline const char* to_string(BasisFamily f) {
  switch (f) {
    case BasisFamily::RationalRaw: return "rational_raw";
    case BasisFamily::ExpRaw: return "exp_raw";
    case BasisFamily::RationalPinned: return "rational_pinned";
    case BasisFamily::ExpPinned: return "exp_pinned";
  }
  return "?";
}

inline const char* to_string(TargetKind t) {
  switch (t) {
    case TargetKind::PowerNeg: return "power_neg";
    case TargetKind::StretchedExp: return "stretched_exp";
  }
  return "?";
}

inline const char* to_string(Spacing s) {
  return s == Spacing::Geometric ? "geometric" : "uniform";
}

inline BasisFamily family_from_string(const std::string& s) {
  if (s == "rational_raw") return BasisFamily::RationalRaw;
  if (s == "exp_raw") return BasisFamily::ExpRaw;
  if (s == "rational_pinned") return BasisFamily::RationalPinned;
  if (s == "exp_pinned") return BasisFamily::ExpPinned;
  throw std::invalid_argument("unknown basis family: " + s);
}

inline TargetKind target_from_string(const std::string& s) {
  if (s == "power_neg") return TargetKind::PowerNeg;
  if (s == "stretched_exp") return TargetKind::StretchedExp;
  throw std::invalid_argument("unknown target: " + s);
}

inline Spacing spacing_from_string(const std::string& s) {
  if (s == "geometric") return Spacing::Geometric;
  if (s == "uniform") return Spacing::Uniform;
  throw std::invalid_argument("unknown spacing: " + s);
}

inline bool is_pinned(BasisFamily f) {
  return f == BasisFamily::RationalPinned || f == BasisFamily::ExpPinned;
}

/// Abscissa where pinned atoms vanish (1 for rational, 0 for exponential).
inline double pin_abscissa(BasisFamily f) {
  switch (f) {
    case BasisFamily::RationalPinned: return 1.0;
    case BasisFamily::ExpPinned: return 0.0;
    default:
      throw std::invalid_argument("pin_abscissa: family is not pinned");
  }
}

inline double eval_atom(BasisFamily family, double x, double v) {
  if (!(v > 0.0)) {
    throw std::invalid_argument("eval_atom: requires v > 0");
  }
  switch (family) {
    case BasisFamily::RationalRaw:
      if (x < 0.0) throw std::invalid_argument("eval_atom: rational atoms require x >= 0");
      return 1.0 / (1.0 + v * x);
    case BasisFamily::ExpRaw:
      if (x < 0.0) throw std::invalid_argument("eval_atom: exponential atoms require x >= 0");
      return std::exp(-v * x);
    case BasisFamily::RationalPinned:
      if (x < 1.0) throw std::invalid_argument("eval_atom: rational_pinned requires x >= 1");
      return 1.0 / (1.0 + v * x) - 1.0 / (1.0 + v);
    case BasisFamily::ExpPinned:
      if (x < 0.0) throw std::invalid_argument("eval_atom: exp_pinned requires x >= 0");
      return std::expm1(-v * x);
  }
  return 0.0;
}

/// Target function with exponent in (0, 1).
struct TargetFunction {
  TargetKind tag;
  double alpha;
};

inline TargetFunction make_target(TargetKind tag, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("make_target: requires 0 < alpha < 1");
  }
  return TargetFunction{tag, alpha};
}

inline double eval_target(const TargetFunction& f, double x) {
  switch (f.tag) {
    case TargetKind::PowerNeg:
      if (x < 1.0) throw std::invalid_argument("eval_target: power_neg requires x >= 1");
      return std::pow(x, -f.alpha);
    case TargetKind::StretchedExp:
      if (x < 0.0) throw std::invalid_argument("eval_target: stretched_exp requires x >= 0");
      return std::exp(-std::pow(x, f.alpha));
  }
  return 0.0;
}

/// Atom family together with the additive offset that realizes the
/// interpolation constraint r(a) = f(a). Raw families carry offset 0.
struct BasisSpec {
  BasisFamily tag;
  double pin_value = 0.0;  // f at the pin abscissa
};

inline BasisSpec make_basis(BasisFamily tag, const TargetFunction& target) {
  BasisSpec basis{tag, 0.0};
  if (is_pinned(tag)) {
    basis.pin_value = eval_target(target, pin_abscissa(tag));
  }
  return basis;
}

/// Discretized admissible values of the nonlinear parameter v.
struct CandidateSet {
  std::vector<double> values;  // sorted ascending, all > 0
  double c = 0.0;
  double d = 0.0;
  std::size_t l = 0;
};

inline CandidateSet build_candidates(double c, double d, std::size_t l,
                                     Spacing spacing = Spacing::Geometric) {
  if (!(c > 0.0)) {
    throw std::invalid_argument("build_candidates: requires c > 0 (atoms require v > 0)");
  }
  if (!(c < d)) {
    throw std::invalid_argument("build_candidates: requires c < d");
  }
  if (l < 2) {
    throw std::invalid_argument("build_candidates: requires l >= 2");
  }
  CandidateSet set;
  set.c = c;
  set.d = d;
  set.l = l;
  set.values.resize(l);
  const double denom = static_cast<double>(l - 1);
  if (spacing == Spacing::Geometric) {
    const double ratio = d / c;
    for (std::size_t k = 0; k < l; ++k) {
      set.values[k] = c * std::pow(ratio, static_cast<double>(k) / denom);
    }
  } else {
    for (std::size_t k = 0; k < l; ++k) {
      set.values[k] = c + (d - c) * static_cast<double>(k) / denom;
    }
  }
  set.values.front() = c;
  set.values.back() = d;
  return set;
}

}  // namespace nnapprox

#endif  // NNAPPROX_DICTIONARY_HPP
