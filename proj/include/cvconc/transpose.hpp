#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstddef>

#include "cvconc/block.hpp"
#include "cvconc/state.hpp"

namespace cvconc {

/// Kernel k(x_i, x_j) on a grid stored as sqrt(w_i) k(x_i, x_j) sqrt(w_j), so
/// Hermitian kernels stay Hermitian matrices and plain traces are weighted
/// kernel traces.
struct DiscreteOperator {
  Eigen::MatrixXcd matrix;

  cplx trace() const { return matrix.trace(); }
  /// Squared Hilbert-Schmidt norm.
  double hs_norm_sq() const { return matrix.squaredNorm(); }
};

/// Largest grid (total nodes) for which dense G x G operators are built.
inline constexpr std::size_t kMaxDenseOperatorNodes = 4096;

/// rho = |psi><psi|.
DiscreteOperator build_rho(const GridState& state);
/// rho~ = |psi><psi*|, kernel phi(u) phi(v).
DiscreteOperator build_rho_tilde(const GridState& state);
/// Partial transpose of rho~ on the complement: phi(u_M, v_Mbar) phi(v_M, u_Mbar).
DiscreteOperator build_rho_tilde_pt(const GridState& state, const Bipartition& bipartition);
/// Partial transpose of rho: phi(u_M, v_Mbar) conj(phi(v_M, u_Mbar)).
DiscreteOperator build_rho_pt(const GridState& state, const Bipartition& bipartition);

/// max over doubled-grid nodes of |Phi(X) - Phi(Lambda X)|. With `weighted`,
/// each node contributes |Phi(X) - Phi(Lambda X)| sqrt(W(X)); its square is
/// then the largest weighted squared wedge coefficient.
double lambda_invariance_gap(const GridState& state, const Bipartition& bipartition,
                             bool weighted = false);

/// |rho~ - rho~_PT|^2 in the Hilbert-Schmidt norm.
double concurrence_route_D(const GridState& state, const Bipartition& bipartition);

struct PtSquareFactorization {
  double pt_square_vs_tensor = 0.0;      // max |rho_PT^2 - rho_M (x) rho_Mbar^T|
  double tilde_product_vs_tensor = 0.0;  // max |rho~_PT rho~_PT^dag - rho_M (x) rho_Mbar|
  /// max |rho_PT^2 - rho_M (x) rho_Mbar| without the transpose on the
  /// complement factor. Vanishes only when rho_Mbar is real.
  double pt_square_vs_untransposed = 0.0;
  double gap() const { return std::max(pt_square_vs_tensor, tilde_product_vs_tensor); }
};

PtSquareFactorization pt_square_factorization(const GridState& state, const Bipartition& bipartition);
double pt_square_factorization_gap(const GridState& state, const Bipartition& bipartition);

/// 2 [1 - sqrt(Tr rho_PT^4)].
double concurrence_route_E(const GridState& state, const Bipartition& bipartition);

struct PptSpectrum {
  double min_eigenvalue = 0.0;
  double antihermitian_residual = 0.0;  // max |K - K^dag| / 2 before Hermitization
};

PptSpectrum ppt_spectrum(const GridState& state, const Bipartition& bipartition);
double ppt_min_eigenvalue(const GridState& state, const Bipartition& bipartition);

}  // namespace cvconc
