#include "cvconc/transpose.hpp"

#include <cmath>
#include <sstream>

#include "cvconc/error.hpp"

namespace cvconc {

namespace {

void require_dense_size(std::size_t g) {
  if (g > kMaxDenseOperatorNodes) {
    std::ostringstream os;
    os << "grid has " << g << " nodes; dense operator routes support at most "
       << kMaxDenseOperatorNodes;
    throw InputError(os.str());
  }
}

Eigen::VectorXcd scaled_amplitudes(const GridState& state) {
  const auto amps = state.amplitudes();
  const auto& w = state.weights();
  Eigen::VectorXcd s(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) s[i] = amps[i] * std::sqrt(w[i]);
  return s;
}

// Block matrix of sqrt(w)-scaled amplitudes, rows = M nodes, cols = complement.
Eigen::MatrixXcd scaled_block(const BlockSplit& s) {
  Eigen::MatrixXcd m(s.rows, s.cols);
  for (std::size_t r = 0; r < s.rows; ++r)
    for (std::size_t c = 0; c < s.cols; ++c)
      m(r, c) = s.at(r, c) * std::sqrt(s.row_w[r] * s.col_w[c]);
  return m;
}

template <bool Conjugate>
DiscreteOperator partial_transpose(const GridState& state, const Bipartition& bipartition) {
  require_dense_size(state.size());
  const auto s = split(state, bipartition);
  const Eigen::MatrixXcd psi = scaled_block(s);
  const auto g = static_cast<Eigen::Index>(state.size());
  DiscreteOperator op{Eigen::MatrixXcd(g, g)};
  // Column-major storage: fill column v for all rows u.
#pragma omp parallel for schedule(static)
  for (Eigen::Index v = 0; v < g; ++v) {
    const auto rv = s.row_of[v];
    const auto cv = s.col_of[v];
    for (Eigen::Index u = 0; u < g; ++u) {
      const cplx b = psi(rv, s.col_of[u]);
      op.matrix(u, v) = psi(s.row_of[u], cv) * (Conjugate ? std::conj(b) : b);
    }
  }
  return op;
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

DiscreteOperator build_rho(const GridState& state) {
  require_dense_size(state.size());
  const auto s = scaled_amplitudes(state);
  return {s * s.adjoint()};
}

DiscreteOperator build_rho_tilde(const GridState& state) {
  require_dense_size(state.size());
  const auto s = scaled_amplitudes(state);
  return {s * s.transpose()};
}

DiscreteOperator build_rho_tilde_pt(const GridState& state, const Bipartition& bipartition) {
  return partial_transpose<false>(state, bipartition);
}

DiscreteOperator build_rho_pt(const GridState& state, const Bipartition& bipartition) {
  return partial_transpose<true>(state, bipartition);
}

double lambda_invariance_gap(const GridState& state, const Bipartition& bipartition,
                             bool weighted) {
  const auto s = split(state, bipartition);
  const LambdaPermutation perm(s);
  const auto amp = state.amplitudes();
  const auto& w = state.weights();
  const std::size_t g = perm.grid_size();
  std::vector<double> row_max(g, 0.0);
  const auto gl = static_cast<long long>(g);
#pragma omp parallel for schedule(static)
  for (long long i1 = 0; i1 < gl; ++i1) {
    double m = 0.0;
    for (std::size_t i2 = 0; i2 < g; ++i2) {
      const std::size_t x = static_cast<std::size_t>(i1) * g + i2;
      const std::size_t lx = perm.apply(x);
      const cplx a = amp[x / g] * amp[x % g];
      const cplx b = amp[lx / g] * amp[lx % g];
      const double scale = weighted ? std::sqrt(w[x / g] * w[x % g]) : 1.0;
      m = std::max(m, std::abs(a - b) * scale);
    }
    row_max[i1] = m;
  }
  return *std::max_element(row_max.begin(), row_max.end());
}

double concurrence_route_D(const GridState& state, const Bipartition& bipartition) {
  const auto tilde = build_rho_tilde(state);
  const auto tilde_pt = build_rho_tilde_pt(state, bipartition);
  return (tilde.matrix - tilde_pt.matrix).squaredNorm();
}

PtSquareFactorization pt_square_factorization(const GridState& state,
                                              const Bipartition& bipartition) {
  const auto s = split(state, bipartition);
  const Eigen::MatrixXcd psi = scaled_block(s);
  const Eigen::MatrixXcd rho_m = psi * psi.adjoint();
  const Eigen::MatrixXcd rho_rest = psi.transpose() * psi.conjugate();

  const auto g = static_cast<Eigen::Index>(state.size());
  Eigen::MatrixXcd tensor(g, g), tensor_t(g, g);
  for (Eigen::Index w = 0; w < g; ++w)
    for (Eigen::Index u = 0; u < g; ++u) {
      const cplx a = rho_m(s.row_of[u], s.row_of[w]);
      tensor(u, w) = a * rho_rest(s.col_of[u], s.col_of[w]);
      tensor_t(u, w) = a * rho_rest(s.col_of[w], s.col_of[u]);
    }

  const auto pt = build_rho_pt(state, bipartition).matrix;
  const auto tilde_pt = build_rho_tilde_pt(state, bipartition).matrix;
  const Eigen::MatrixXcd pt_sq = pt * pt;
  const Eigen::MatrixXcd tilde_prod = tilde_pt * tilde_pt.adjoint();

  PtSquareFactorization f;
  f.pt_square_vs_tensor = max_abs_diff(pt_sq, tensor_t);
  f.tilde_product_vs_tensor = max_abs_diff(tilde_prod, tensor);
  f.pt_square_vs_untransposed = max_abs_diff(pt_sq, tensor);
  return f;
}

double pt_square_factorization_gap(const GridState& state, const Bipartition& bipartition) {
  return pt_square_factorization(state, bipartition).gap();
}

double concurrence_route_E(const GridState& state, const Bipartition& bipartition) {
  const auto pt = build_rho_pt(state, bipartition).matrix;
  const Eigen::MatrixXcd pt_sq = pt * pt;
  const double tr4 = pt_sq.cwiseProduct(pt_sq.transpose()).sum().real();
  if (tr4 < -1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "negative Tr(rho_PT^4) = " << tr4;
    throw NumericError(os.str());
  }
  return 2.0 * (1.0 - std::sqrt(std::max(tr4, 0.0)));
}

PptSpectrum ppt_spectrum(const GridState& state, const Bipartition& bipartition) {
  const auto pt = build_rho_pt(state, bipartition).matrix;
  PptSpectrum out;
  out.antihermitian_residual = 0.5 * (pt - pt.adjoint()).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd herm = 0.5 * (pt + pt.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("eigensolver failed on rho_PT");
  out.min_eigenvalue = es.eigenvalues().minCoeff();
  return out;
}

double ppt_min_eigenvalue(const GridState& state, const Bipartition& bipartition) {
  return ppt_spectrum(state, bipartition).min_eigenvalue;
}

}  // namespace cvconc
