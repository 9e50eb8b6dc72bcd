#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "corpus.hpp"
#include "cvconc/error.hpp"
#include "cvconc/gaussian.hpp"
#include "cvconc/wigner.hpp"

namespace cvconc {
namespace {

using testing::Rng;

const Bipartition kFirst(2, {0});

// W(x, p) = pi^-2 \int e^{2i p.y} psi(x - y) conj(psi(x + y)) d^2y by midpoint
// quadrature on the wavefunction itself.
double wigner_by_quadrature(const GaussianPureState& st, const double x[2], const double p[2]) {
  const int n = 160;
  const double box = 8.0, h = 2 * box / n;
  cplx sum = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double y[] = {-box + (i + 0.5) * h, -box + (j + 0.5) * h};
      const double lo[] = {x[0] - y[0], x[1] - y[1]};
      const double hi[] = {x[0] + y[0], x[1] + y[1]};
      sum += std::polar(1.0, 2 * (p[0] * y[0] + p[1] * y[1])) * evaluate_gaussian(st, lo) *
             std::conj(evaluate_gaussian(st, hi));
    }
  EXPECT_LT(std::abs(sum.imag()) * h * h, 1e-10);
  return sum.real() * h * h / (std::numbers::pi * std::numbers::pi);
}

TEST(Wigner, VacuumOriginValue) {
  const double z[] = {0.0, 0.0};
  EXPECT_NEAR(wigner_gaussian(GaussianPureState::two_mode(1, 1, 0.0), z, z),
              1.0 / (std::numbers::pi * std::numbers::pi), 1e-15);
}

TEST(Wigner, ClosedFormMatchesDefiningIntegral) {
  Rng rng(1);
  std::normal_distribution<double> g(0.0, 0.7);
  for (cplx c : {cplx(1.0, 0.0), cplx(0.0, 1.5), cplx(-0.6, 0.0)}) {
    const auto st = GaussianPureState::two_mode(1.2, 0.8, c);
    for (int t = 0; t < 4; ++t) {
      const double x[] = {g(rng), g(rng)}, p[] = {g(rng), g(rng)};
      EXPECT_NEAR(wigner_gaussian(st, x, p), wigner_by_quadrature(st, x, p), 1e-12) << c;
    }
  }
}

TEST(Wigner, NormalizationAndParity) {
  Rng rng(2);
  std::normal_distribution<double> g;
  for (cplx c : {cplx(0.0), cplx(1.0), cplx(0.0, 2.0), cplx(1.9)}) {
    const auto st = GaussianPureState::two_mode(1, 1, c);
    EXPECT_NEAR(wigner_normalization(st, 24), 1.0, 1e-8) << c;
    const GaussianWigner w(st);
    for (int t = 0; t < 20; ++t) {
      const double xi[] = {g(rng), g(rng), g(rng), g(rng)};
      const double neg[] = {-xi[0], -xi[1], -xi[2], -xi[3]};
      EXPECT_DOUBLE_EQ(w.at(xi), w.at(neg));
    }
  }
}

std::vector<PhaseSpacePoint> random_points(Rng& rng, int count) {
  std::normal_distribution<double> g;
  std::vector<PhaseSpacePoint> pts(count);
  for (auto& p : pts) {
    p.X = {g(rng), g(rng), g(rng), g(rng)};
    p.P = {g(rng), g(rng), g(rng), g(rng)};
  }
  return pts;
}

TEST(WignerInvariance, SeparableVersusEntangled) {
  Rng rng(3);
  const auto hundred = random_points(rng, 100);
  EXPECT_LT(wigner_invariance_gap(GaussianPureState::two_mode(1, 1, 0.0), kFirst, hundred), 1e-10);
  const auto thousand = random_points(rng, 1000);
  EXPECT_GT(wigner_invariance_gap(GaussianPureState::two_mode(1, 1, 1.0), kFirst, thousand), 1e-4);
}

TEST(WignerInvariance, FixedPointsHaveZeroGap) {
  Rng rng(4);
  auto pts = random_points(rng, 200);
  for (auto& p : pts) {
    p.X[2] = p.X[0];  // M-components equal across copies
    p.P[2] = p.P[0];
  }
  EXPECT_EQ(wigner_invariance_gap(GaussianPureState::two_mode(1, 1, 1.0), kFirst, pts), 0.0);
}

TEST(WignerInvariance, LambdaIsAnInvolution) {
  Rng rng(5);
  for (const auto& p : random_points(rng, 20)) {
    const auto q = apply_lambda(apply_lambda(p, kFirst), kFirst);
    EXPECT_EQ(q.X, p.X);
    EXPECT_EQ(q.P, p.P);
  }
  PhaseSpacePoint bad{{0.0, 1.0}, {0.0, 1.0}};
  EXPECT_THROW(apply_lambda(bad, kFirst), InputError);
}

TEST(WignerFourthMoment, MatchesClosedForm) {
  for (auto spec : {TwoModeGaussianSpec{1, 1, 0.0, CouplingBranch::kReal},
                    TwoModeGaussianSpec{1, 1, 1.0, CouplingBranch::kReal},
                    TwoModeGaussianSpec{1.3, 0.8, 1.2, CouplingBranch::kImaginary}}) {
    const auto m = wigner_fourth_moment(spec.state(), kFirst, 24);
    EXPECT_NEAR(m.concurrence, closed_form_concurrence(spec), 1e-3);
    EXPECT_NEAR(m.purity_m, m.purity_rest, 1e-10);
  }
  Eigen::MatrixXcd a3 = Eigen::MatrixXcd::Identity(3, 3);
  EXPECT_THROW(wigner_fourth_moment(GaussianPureState(a3), Bipartition(3, {0}), 8), InputError);
}

}  // namespace
}  // namespace cvconc
