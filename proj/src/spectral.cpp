#include "cvconc/spectral.hpp"

#include <cmath>
#include <sstream>

#include "cvconc/block.hpp"
#include "cvconc/error.hpp"

namespace cvconc {

ReducedDensity reduce(const GridState& state, const Bipartition& bipartition) {
  const auto s = split(state, bipartition);
  Eigen::MatrixXcd psi(s.rows, s.cols);
  for (std::size_t r = 0; r < s.rows; ++r)
    for (std::size_t c = 0; c < s.cols; ++c)
      psi(r, c) = s.at(r, c) * std::sqrt(s.row_w[r] * s.col_w[c]);
  return {DiscreteOperator{psi * psi.adjoint()}, bipartition};
}

double purity(const ReducedDensity& rd) {
  const auto& m = rd.op.matrix;
  // Tr(rho^2) = sum_ij rho_ij rho_ji
  const double p = m.cwiseProduct(m.transpose()).sum().real();
  if (p < -1e-9 || p > 1.0 + 1e-9) {
    std::ostringstream os;
    os.precision(17);
    os << "purity " << p << " outside [0, 1]";
    throw NumericError(os.str());
  }
  return p;
}

double concurrence_route_C(const GridState& state, const Bipartition& bipartition) {
  return 2.0 * (1.0 - purity(reduce(state, bipartition)));
}

Eigen::VectorXd density_eigenvalues(const ReducedDensity& rd) {
  const Eigen::MatrixXcd herm = 0.5 * (rd.op.matrix + rd.op.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("eigensolver failed on reduced density");
  return es.eigenvalues();
}

double von_neumann_entropy(const ReducedDensity& rd) {
  const auto ev = density_eigenvalues(rd);
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double l = ev[i];
    if (l < -1e-8) {
      std::ostringstream os;
      os << "reduced density has eigenvalue " << l;
      throw NumericError(os.str());
    }
    if (l > kEntropyEigenFloor) s -= l * std::log(l);
  }
  return s;
}

double hs_identity_gap(const GridState& state, const Bipartition& bipartition) {
  const double d = concurrence_route_D(state, bipartition);
  const double p = purity(reduce(state, bipartition));
  return std::abs(d + 2.0 * p - 2.0);
}

}  // namespace cvconc
