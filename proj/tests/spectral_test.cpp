#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "corpus.hpp"
#include "cvconc/concurrence.hpp"
#include "cvconc/error.hpp"
#include "cvconc/spectral.hpp"

namespace cvconc {
namespace {

using testing::Rng;

const Bipartition kFirst(2, {0});

GridState gaussian_grid(cplx c, int pts) {
  const std::vector<GridAxis> axes(2, GridAxis{-6.0, 6.0, pts});
  return discretize(GaussianPureState::two_mode(1, 1, c), axes).state;
}

GridState bell() {
  const std::vector<GridAxis> axes(2, GridAxis{0.0, 2.0, 2});
  return GridState::normalized(midpoint_rule(axes), {1.0, 0.0, 0.0, 1.0});
}

// phi = f0 (x) g0 + eps f1 (x) g1 on a random grid, normalized.
GridState weakly_entangled(Rng& rng, double eps) {
  const int n = 10;
  const auto f0 = testing::random_complex(rng, n), g0 = testing::random_complex(rng, n);
  const auto f1 = testing::random_complex(rng, n), g1 = testing::random_complex(rng, n);
  std::vector<cplx> amp(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) amp[i * n + j] = f0[i] * g0[j] + eps * f1[i] * g1[j];
  const std::vector<GridAxis> axes(2, GridAxis{-2.0, 2.0, n});
  return GridState::normalized(midpoint_rule(axes), amp);
}

// Entropy of a thermal single-mode state with purity mu.
double thermal_entropy(double mu) {
  const double a = (1 + mu) / (2 * mu), b = (1 - mu) / (2 * mu);
  return a * std::log(a) - b * std::log(b);
}

TEST(Reduce, InvariantsOnCorpus) {
  for (const auto& s : testing::two_axis_corpus(1, 24)) {
    const auto rd = reduce(s, kFirst);
    const auto& m = rd.op.matrix;
    EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(rd.op.trace().real(), 1.0, 1e-10);
    EXPECT_GE(density_eigenvalues(rd).minCoeff(), -1e-10);
    EXPECT_NEAR(purity(rd), purity(reduce(s, kFirst.swapped())), 1e-10);
  }
}

TEST(Reduce, ProductAndBellCases) {
  Rng rng(2);
  const auto p = testing::random_product_state(rng, {7, 5}, kFirst);
  const auto ev = density_eigenvalues(reduce(p, kFirst));
  EXPECT_NEAR(ev.maxCoeff(), 1.0, 1e-12);
  EXPECT_NEAR(ev.sum() - ev.maxCoeff(), 0.0, 1e-12);
  EXPECT_NEAR(purity(reduce(p, kFirst)), 1.0, 1e-12);
  EXPECT_NEAR(concurrence_route_C(p, kFirst), 0.0, 1e-12);

  const auto rb = reduce(bell(), kFirst).op.matrix;
  EXPECT_NEAR(rb(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(rb(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(rb(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(concurrence_route_C(bell(), kFirst), 1.0, 1e-15);
}

TEST(Reduce, GaussianPurity) {
  EXPECT_NEAR(purity(reduce(gaussian_grid(0.0, 48), kFirst)), 1.0, 1e-10);
  EXPECT_NEAR(concurrence_route_C(gaussian_grid(1.0, 48), kFirst), 2.0 - std::sqrt(3.0), 2e-3);
}

TEST(Entropy, KnownValues) {
  Rng rng(3);
  EXPECT_NEAR(von_neumann_entropy(reduce(testing::random_product_state(rng, {6, 6}, kFirst), kFirst)), 0.0,
              1e-9);
  EXPECT_NEAR(von_neumann_entropy(reduce(bell(), kFirst)), std::numbers::ln2, 1e-14);
}

TEST(Entropy, GaussianMatchesThermalFormula) {
  // The reduction of a two-mode Gaussian is a thermal state of purity
  // sqrt(4ab - c^2) / (2 sqrt(ab)).
  const auto s = gaussian_grid(1.0, 64);
  const double s_grid = von_neumann_entropy(reduce(s, kFirst));
  EXPECT_NEAR(s_grid, thermal_entropy(std::sqrt(3.0) / 2.0), 1e-6);
  EXPECT_GT(s_grid, (2.0 - std::sqrt(3.0)) / 2.0);
  EXPECT_GT(s_grid, 0.13397);
}

TEST(Entropy, BoundOnCorpus) {
  for (const auto& s : testing::two_axis_corpus(4, 40)) {
    const double e2 = concurrence_route_B(s, kFirst);
    const double S = von_neumann_entropy(reduce(s, kFirst));
    EXPECT_GE(S, e2 / 2.0 - 1e-9);
    if (e2 <= 1e-10) EXPECT_LE(S, 1e-9);
  }
}

TEST(Entropy, SeriesTailLiesBetweenThirdMomentBounds) {
  // S = sum_k <(1 - rho)^k> / k; the tail past k = 2 is bounded below by
  // <(1 - rho)^3>/3 and above by sum_{lambda > 0} (1 - lambda)^3 / 3.
  Rng rng(5);
  for (double eps : {0.01, 0.03, 0.05}) {
    const auto s = weakly_entangled(rng, eps);
    const auto ev = density_eigenvalues(reduce(s, kFirst));
    const double e2 = concurrence_route_B(s, kFirst);
    EXPECT_LT(e2, 0.05);
    double m2 = 0, m3 = 0, upper = 0;
    for (double l : ev) {
      if (l <= kEntropyEigenFloor) continue;
      m2 += l * std::pow(1 - l, 2);
      m3 += l * std::pow(1 - l, 3);
      upper += std::pow(1 - l, 3);
    }
    const double tail = von_neumann_entropy(reduce(s, kFirst)) - (e2 / 2 + m2 / 2);
    EXPECT_GE(tail, m3 / 3 - 1e-12);
    EXPECT_LE(tail, upper / 3 + 1e-12);
  }
}

TEST(Entropy, ThirdMomentAloneDoesNotBoundTheTail) {
  // With a small Schmidt weight p the tail behaves like -p ln p while
  // <(1 - rho)^3> ~ p, so |tail| <= <(1 - rho)^3> fails at weak entanglement.
  Rng rng(6);
  const auto s = weakly_entangled(rng, 0.02);
  const auto ev = density_eigenvalues(reduce(s, kFirst));
  double m2 = 0, m3 = 0;
  for (double l : ev) {
    m2 += l * std::pow(1 - l, 2);
    m3 += l * std::pow(1 - l, 3);
  }
  const double e2 = concurrence_route_B(s, kFirst);
  const double tail = von_neumann_entropy(reduce(s, kFirst)) - (e2 / 2 + m2 / 2);
  EXPECT_LT(e2, 0.05);
  EXPECT_GT(std::abs(tail), m3);
}

TEST(HsIdentity, HoldsOnCorpusAndSpecialCases) {
  for (const auto& s : testing::two_axis_corpus(7, 24)) EXPECT_LT(hs_identity_gap(s, kFirst), 1e-10);
  EXPECT_LT(hs_identity_gap(bell(), kFirst), 1e-14);
  Rng rng(8);
  const auto p = testing::random_product_state(rng, {5, 9}, kFirst);
  EXPECT_NEAR(concurrence_route_D(p, kFirst), 0.0, 1e-12);
  EXPECT_LT(hs_identity_gap(p, kFirst), 1e-12);
}

}  // namespace
}  // namespace cvconc
