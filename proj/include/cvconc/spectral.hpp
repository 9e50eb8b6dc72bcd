#pragma once

#include <Eigen/Dense>

#include "cvconc/state.hpp"
#include "cvconc/transpose.hpp"

namespace cvconc {

/// Reduced density operator on the M-block grid (symmetric sqrt(w) weighting).
struct ReducedDensity {
  DiscreteOperator op;
  Bipartition source;
};

ReducedDensity reduce(const GridState& state, const Bipartition& bipartition);

/// Tr(rho_M^2). Throws NumericError outside [-1e-9, 1 + 1e-9].
double purity(const ReducedDensity& rd);
/// 2 (1 - Tr rho_M^2).
double concurrence_route_C(const GridState& state, const Bipartition& bipartition);

/// Eigenvalues below this are dropped from the entropy sum (0 ln 0 = 0).
inline constexpr double kEntropyEigenFloor = 1e-14;

Eigen::VectorXd density_eigenvalues(const ReducedDensity& rd);
/// -sum lambda ln lambda. Throws NumericError on an eigenvalue below -1e-8.
double von_neumann_entropy(const ReducedDensity& rd);

/// |route_D + 2 Tr rho_M^2 - 2|, the continuum form of
/// |rho~ - rho~_PT|^2 + 2 |rho_M - rho_1|^2 = 2.
double hs_identity_gap(const GridState& state, const Bipartition& bipartition);

}  // namespace cvconc
