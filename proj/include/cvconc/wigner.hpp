#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "cvconc/state.hpp"

namespace cvconc {

/// Wigner function of a Gaussian pure state, with the convention
/// W(x, p) = pi^-n \int e^{2i p.y} psi(x - y) conj(psi(x + y)) dy.
/// Completing the square gives W = pi^-n exp(-xi^T Q xi), xi = (x, p),
/// Q = [[R + I R^-1 I, I R^-1], [R^-1 I, R^-1]] for A = R + iI.
class GaussianWigner {
 public:
  explicit GaussianWigner(const GaussianPureState& state);

  std::size_t dims() const { return n_; }
  double operator()(std::span<const double> x, std::span<const double> p) const;
  /// Evaluates at a packed phase-space point xi = (x_1..x_n, p_1..p_n).
  double at(std::span<const double> xi) const;
  const Eigen::MatrixXd& phase_space_form() const { return q_; }

 private:
  std::size_t n_;
  Eigen::MatrixXd q_;
};

double wigner_gaussian(const GaussianPureState& state, std::span<const double> x,
                       std::span<const double> p);

/// Point of the doubled phase space: X = (x1, x2), P = (p1, p2), each of length 2n.
struct PhaseSpacePoint {
  std::vector<double> X;
  std::vector<double> P;
};

/// Swaps the M-components of the two copies in both X and P.
PhaseSpacePoint apply_lambda(const PhaseSpacePoint& point, const Bipartition& bipartition);

/// W(x1, p1) W(x2, p2).
double doubled_wigner(const GaussianWigner& w, const PhaseSpacePoint& point);

/// max over samples of |W~(X, P) - W~(Lambda X, Lambda P)|.
double wigner_invariance_gap(const GaussianPureState& state, const Bipartition& bipartition,
                             std::span<const PhaseSpacePoint> samples);

/// \int W dx dp on a Gauss-Hermite product rule with `nodes` points per axis,
/// laid out along the principal axes of W.
double wigner_normalization(const GaussianPureState& state, int nodes);

struct WignerFourthMoment {
  double trace_pt4 = 0.0;      // Tr(rho_PT^4) from phase-space quadrature
  double concurrence = 0.0;    // 2 [1 - sqrt(trace_pt4)]
  double purity_m = 0.0;       // 2 pi \int W_M^2
  double purity_rest = 0.0;    // 2 pi \int W'_Mbar^2
};

/// Two-mode only. Uses W_PT(x1, p1, x2, p2) = W(x1, p1, x2, -p2); rho_PT^2
/// factorizes into the two reductions, whose Wigner functions are the
/// marginals of W_PT, so Tr(rho_PT^4) = (2 pi \int W_M^2)(2 pi \int W'_Mbar^2).
/// Marginals and their squares are integrated by Gauss-Hermite rules placed
/// along the principal axes of each Gaussian factor.
WignerFourthMoment wigner_fourth_moment(const GaussianPureState& state,
                                        const Bipartition& bipartition, int nodes);

}  // namespace cvconc
