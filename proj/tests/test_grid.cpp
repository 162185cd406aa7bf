#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nnapprox/grid.hpp"

using namespace nnapprox;

TEST(Grid, SingleNodeExpInverseX) {
  const double e = std::exp(1.0);
  const auto g = build_grid(1.0, e, 1, TransformKind::Exp, WeightKind::InverseX);
  ASSERT_EQ(g.nodes.size(), 1u);
  EXPECT_DOUBLE_EQ(g.beta, 1.0);
  EXPECT_DOUBLE_EQ(g.nodes[0], std::exp(0.5));
  EXPECT_DOUBLE_EQ(g.weights[0], 1.0);
}

TEST(Grid, PaperRationalGridHasUniformThetaWeights) {
  const auto g = build_grid(1.0, 1e15, 5000, TransformKind::Exp, WeightKind::InverseX);
  ASSERT_EQ(g.nodes.size(), 5000u);
  const double dtheta = std::log(1e15) / 5000.0;
  for (double w : g.weights) {
    EXPECT_DOUBLE_EQ(w, dtheta);
  }
}

TEST(Grid, WeightSumMatchesAnalyticIntegral) {
  // sum of weights should equal the integral of the weight over [a, b]
  const auto g =
      build_grid(0.0, 1e3, 5000, TransformKind::ExpMinusOne, WeightKind::InverseOnePlusX);
  double sum = 0.0;
  for (double w : g.weights) sum += w;
  EXPECT_NEAR(sum, std::log(1001.0), 1e-12);
}

TEST(Grid, WeightSumToleranceOnNonCancellingPair) {
  const auto g = build_grid(1.0, 10.0, 2000, TransformKind::Identity, WeightKind::InverseX);
  double sum = 0.0;
  for (double w : g.weights) sum += w;
  EXPECT_NEAR(sum, std::log(10.0), 1e-3 * std::log(10.0));
}

TEST(Grid, DomainViolationsRejected) {
  EXPECT_THROW(build_grid(2.0, 1.0, 10, TransformKind::Identity, WeightKind::Unit),
               std::invalid_argument);
  EXPECT_THROW(build_grid(1.0, 2.0, 0, TransformKind::Identity, WeightKind::Unit),
               std::invalid_argument);
  EXPECT_THROW(build_grid(0.5, 2.0, 10, TransformKind::Exp, WeightKind::Unit),
               std::invalid_argument);
  EXPECT_THROW(build_grid(-0.5, 2.0, 10, TransformKind::ExpMinusOne, WeightKind::Unit),
               std::invalid_argument);
}

TEST(Grid, NodesOrderedPositiveWeightsProperty) {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> endpoint(1.0, 100.0);
  std::uniform_int_distribution<int> count(1, 500);
  const TransformKind transforms[] = {TransformKind::Identity, TransformKind::Exp,
                                      TransformKind::ExpMinusOne};
  const WeightKind weights[] = {WeightKind::Unit, WeightKind::InverseX,
                                WeightKind::InverseOnePlusX};
  for (int trial = 0; trial < 200; ++trial) {
    double a = endpoint(rng);
    double b = endpoint(rng);
    if (a > b) std::swap(a, b);
    if (a == b) b += 1.0;
    const auto t = transforms[trial % 3];
    const auto w = weights[(trial / 3) % 3];
    const auto g = build_grid(a, b, static_cast<std::size_t>(count(rng)), t, w);
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      EXPECT_GT(g.nodes[j], a);
      EXPECT_LT(g.nodes[j], b);
      EXPECT_GT(g.weights[j], 0.0);
      if (j > 0) EXPECT_GT(g.nodes[j], g.nodes[j - 1]);
    }
  }
}

namespace {

double weighted_sum(const QuadratureGrid& g, double (*f)(double)) {
  double s = 0.0;
  for (std::size_t j = 0; j < g.nodes.size(); ++j) s += g.weights[j] * f(g.nodes[j]);
  return s;
}

}  // namespace

TEST(Grid, RefinementIsSecondOrder) {
  // g(x) = e^{-theta(x)} = 1/x on the exp-transformed grid; the exact value
  // of the weighted integral is int_1^b x^{-2} dx = 1 - 1/b.
  const double b = 50.0;
  const double exact = 1.0 - 1.0 / b;
  auto err = [&](std::size_t n) {
    const auto g = build_grid(1.0, b, n, TransformKind::Exp, WeightKind::InverseX);
    return std::abs(weighted_sum(g, [](double x) { return 1.0 / x; }) - exact);
  };
  const double e1 = err(200), e2 = err(400), e3 = err(800);
  EXPECT_NEAR(e1 / e2, 4.0, 0.5);
  EXPECT_NEAR(e2 / e3, 4.0, 0.5);

  // g(x) = 1 with a non-cancelling weight: same second-order behavior.
  auto err_const = [&](std::size_t n) {
    const auto g = build_grid(1.0, b, n, TransformKind::Exp, WeightKind::Unit);
    return std::abs(weighted_sum(g, [](double) { return 1.0; }) - (b - 1.0));
  };
  const double c1 = err_const(200), c2 = err_const(400);
  EXPECT_NEAR(c1 / c2, 4.0, 0.5);
}
