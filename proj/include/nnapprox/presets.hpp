#ifndef NNAPPROX_PRESETS_HPP
#define NNAPPROX_PRESETS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "nnapprox/dictionary.hpp"
#include "nnapprox/grid.hpp"

namespace nnapprox {

/// Fully specified experiment: target, atom family, fit interval and grid,
/// candidate interval and count, requested term count, iteration cap.
struct ExperimentConfig {
  TargetFunction target{TargetKind::PowerNeg, 0.5};
  BasisFamily family = BasisFamily::RationalPinned;
  double a = 1.0;
  double b = 1e15;
  TransformKind transform = TransformKind::Exp;
  WeightKind weight = WeightKind::InverseX;
  std::size_t n = 5000;
  std::size_t l = 1000;
  double c = 1e-15;
  double d = 1e2;
  Spacing spacing = Spacing::Geometric;
  int m = 10;
  int max_outer = 500;
};

/// Named experiment configurations.
///
/// rational_power fits x^{-alpha} on [1, 1e15] with pinned rational atoms;
/// its candidate interval (c, d) = (1e-15, 1e2) brackets the known recovered
/// parameter range with margin and is overridable. expsum_stretched fits
/// exp(-x^alpha) on [0, 1e3] with pinned exponential atoms.
inline ExperimentConfig preset(const std::string& name, double alpha, int m) {
  if (m < 1) throw std::invalid_argument("preset: requires m >= 1");
  if (name == "rational_power") {
    ExperimentConfig cfg;
    cfg.target = make_target(TargetKind::PowerNeg, alpha);
    cfg.family = BasisFamily::RationalPinned;
    cfg.a = 1.0;
    cfg.b = 1e15;
    cfg.transform = TransformKind::Exp;
    cfg.weight = WeightKind::InverseX;
    cfg.n = 5000;
    cfg.l = 1000;
    cfg.c = 1e-15;
    cfg.d = 1e2;
    cfg.m = m;
    cfg.max_outer = 500;
    return cfg;
  }
  if (name == "expsum_stretched") {
    ExperimentConfig cfg;
    cfg.target = make_target(TargetKind::StretchedExp, alpha);
    cfg.family = BasisFamily::ExpPinned;
    cfg.a = 0.0;
    cfg.b = 1e3;
    cfg.transform = TransformKind::ExpMinusOne;
    cfg.weight = WeightKind::InverseOnePlusX;
    cfg.n = 5000;
    cfg.l = 1000;
    cfg.c = 1e-4;
    cfg.d = 1e4;
    cfg.m = m;
    cfg.max_outer = 500;
    return cfg;
  }
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace nnapprox

#endif  // NNAPPROX_PRESETS_HPP
