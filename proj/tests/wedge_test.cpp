#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "cvconc/error.hpp"
#include "cvconc/wedge.hpp"

namespace cvconc {
namespace {

using testing::Rng;

std::vector<double> random_weights(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.05, 2.0);
  std::vector<double> w(n);
  for (auto& x : w) x = u(rng);
  return w;
}

// Both sides of the Lagrange identity from first principles.
struct LagrangeSides {
  double lhs, rhs;
};

LagrangeSides lagrange_sides(const std::vector<cplx>& f, const std::vector<cplx>& g,
                             const std::vector<double>& w) {
  long double ff = 0, gg = 0;
  std::complex<long double> fg = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    ff += std::norm(f[i]) * w[i];
    gg += std::norm(g[i]) * w[i];
    fg += std::complex<long double>(std::conj(f[i]) * g[i] * w[i]);
  }
  long double rhs = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      rhs += std::norm(f[i] * g[j] - f[j] * g[i]) * w[i] * w[j];
  return {static_cast<double>(ff * gg - std::norm(fg)), static_cast<double>(rhs)};
}

TEST(Wedge, ParallelVectorsGiveZero) {
  Rng rng(1);
  const auto f = testing::random_complex(rng, 9);
  const cplx k(0.3, -1.7);
  std::vector<cplx> g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = k * f[i];
  const auto w = random_weights(rng, f.size());
  const auto b = wedge(f, g, w);
  for (auto c : b.coefficients()) EXPECT_LT(std::abs(c), 1e-14);
}

TEST(Wedge, BasisPair) {
  const std::vector<cplx> f{1.0, 0.0}, g{0.0, 1.0};
  const std::vector<double> w{1.0, 1.0};
  const auto b = wedge(f, g, w);
  ASSERT_EQ(b.coefficients().size(), 1u);
  EXPECT_EQ(b.coefficient(0, 1), cplx(1.0));
  EXPECT_EQ(b.coefficient(1, 0), cplx(-1.0));
  EXPECT_EQ(b.coefficient(1, 1), cplx(0.0));
}

TEST(Wedge, Antisymmetric) {
  Rng rng(2);
  const auto f = testing::random_complex(rng, 12), g = testing::random_complex(rng, 12);
  const auto w = random_weights(rng, 12);
  const auto fg = wedge(f, g, w), gf = wedge(g, f, w);
  for (std::size_t i = 0; i < fg.coefficients().size(); ++i)
    EXPECT_EQ(fg.coefficients()[i], -gf.coefficients()[i]);
}

TEST(Wedge, BilinearAndNilpotent) {
  Rng rng(3);
  const auto f = testing::random_complex(rng, 10), g = testing::random_complex(rng, 10);
  const auto w = random_weights(rng, 10);
  const cplx alpha(0.4, 1.1), beta(-2.0, 0.5);
  std::vector<cplx> h(10);
  for (int i = 0; i < 10; ++i) h[i] = alpha * f[i] + beta * g[i];
  const auto fh = wedge(f, h, w), fg = wedge(f, g, w);
  for (std::size_t i = 0; i < fh.coefficients().size(); ++i)
    EXPECT_LT(std::abs(fh.coefficients()[i] - beta * fg.coefficients()[i]), 1e-13);
}

TEST(Wedge, PackedOffsetsCoverTriangle) {
  const std::size_t n = 7;
  std::size_t expect = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) EXPECT_EQ(Bivector::offset(i, j, n), expect++);
}

TEST(Wedge, LengthMismatchRejected) {
  const std::vector<cplx> f(3), g(4);
  const std::vector<double> w(3, 1.0);
  EXPECT_THROW(wedge(f, g, w), InputError);
  EXPECT_THROW(lagrange_identity_gap(f, g, w), InputError);
}

TEST(PNorm, SmallCases) {
  const std::vector<double> w3(3, 1.0);
  const Bivector zero(std::vector<cplx>(3, 0.0), w3);
  for (auto p : {PNorm::kOne, PNorm::kTwo, PNorm::kInfinity}) EXPECT_EQ(bivector_p_norm(zero, p), 0.0);

  const Bivector single(std::vector<cplx>{3.0}, std::vector<double>{1.0, 1.0});
  for (auto p : {PNorm::kOne, PNorm::kTwo, PNorm::kInfinity}) EXPECT_DOUBLE_EQ(bivector_p_norm(single, p), 3.0);

  const Bivector pair(std::vector<cplx>{3.0, 4.0, 0.0}, w3);
  EXPECT_DOUBLE_EQ(bivector_p_norm(pair, PNorm::kTwo), 5.0);
  EXPECT_DOUBLE_EQ(bivector_p_norm(pair, PNorm::kOne), 7.0);
  EXPECT_DOUBLE_EQ(bivector_p_norm(pair, PNorm::kInfinity), 4.0);
  EXPECT_DOUBLE_EQ(bivector_p_norm(pair, 2), 5.0);
  EXPECT_DOUBLE_EQ(bivector_p_norm(pair, 0), 4.0);
  EXPECT_THROW(bivector_p_norm(pair, 3), InputError);
}

TEST(PNorm, WeightsEnterAsPairProducts) {
  const Bivector b(std::vector<cplx>{2.0}, std::vector<double>{0.25, 4.0});
  EXPECT_DOUBLE_EQ(bivector_p_norm(b, PNorm::kOne), 2.0);
  EXPECT_DOUBLE_EQ(bivector_p_norm(b, PNorm::kTwo), 2.0);
  EXPECT_DOUBLE_EQ(bivector_p_norm(b, PNorm::kInfinity), 2.0);
}

TEST(Lagrange, TrivialCases) {
  Rng rng(4);
  const auto f = testing::random_complex(rng, 20);
  const auto w = random_weights(rng, 20);
  EXPECT_EQ(lagrange_identity_gap(f, f, w), 0.0);
  const std::vector<cplx> e0{1.0, 0.0, 0.0}, e1{0.0, 1.0, 0.0};
  const std::vector<double> ones(3, 1.0);
  EXPECT_EQ(lagrange_identity_gap(e0, e1, ones), 0.0);
}

TEST(Lagrange, GapMatchesIndependentSidesOnRandomPairs) {
  Rng rng(5);
  std::uniform_int_distribution<int> len(2, 200);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = len(rng);
    const auto f = testing::random_complex(rng, n), g = testing::random_complex(rng, n);
    const auto w = random_weights(rng, n);
    const auto sides = lagrange_sides(f, g, w);
    double ff = 0, gg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ff += std::norm(f[i]) * w[i];
      gg += std::norm(g[i]) * w[i];
    }
    EXPECT_LT(std::abs(sides.lhs - sides.rhs), 1e-12 * ff * gg);
    EXPECT_LT(std::abs(lagrange_identity_gap(f, g, w)), 1e-12 * ff * gg);
    const double two = bivector_p_norm(wedge(f, g, w), PNorm::kTwo);
    EXPECT_NEAR(two * two, sides.lhs, 1e-12 * ff * gg);
  }
}

}  // namespace
}  // namespace cvconc
