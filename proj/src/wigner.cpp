#include "cvconc/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cvconc/error.hpp"
#include "cvconc/quadrature.hpp"

namespace cvconc {

GaussianWigner::GaussianWigner(const GaussianPureState& state) : n_(state.dims()) {
  const Eigen::MatrixXd re = state.precision().real();
  const Eigen::MatrixXd im = state.precision().imag();
  const Eigen::MatrixXd re_inv = re.llt().solve(Eigen::MatrixXd::Identity(n_, n_));
  const auto n = static_cast<Eigen::Index>(n_);
  q_.resize(2 * n, 2 * n);
  q_.topLeftCorner(n, n) = re + im * re_inv * im;
  q_.topRightCorner(n, n) = im * re_inv;
  q_.bottomLeftCorner(n, n) = re_inv * im;
  q_.bottomRightCorner(n, n) = re_inv;
  q_ = 0.5 * (q_ + q_.transpose()).eval();
}

double GaussianWigner::at(std::span<const double> xi) const {
  if (xi.size() != 2 * n_) throw InputError("phase-space point has wrong dimension");
  const Eigen::Map<const Eigen::VectorXd> v(xi.data(), static_cast<Eigen::Index>(xi.size()));
  return std::pow(std::numbers::pi, -static_cast<double>(n_)) * std::exp(-v.dot(q_ * v));
}

double GaussianWigner::operator()(std::span<const double> x, std::span<const double> p) const {
  if (x.size() != n_ || p.size() != n_) throw InputError("phase-space point has wrong dimension");
  std::vector<double> xi(x.begin(), x.end());
  xi.insert(xi.end(), p.begin(), p.end());
  return at(xi);
}

double wigner_gaussian(const GaussianPureState& state, std::span<const double> x,
                       std::span<const double> p) {
  return GaussianWigner(state)(x, p);
}

PhaseSpacePoint apply_lambda(const PhaseSpacePoint& point, const Bipartition& bipartition) {
  const std::size_t n = bipartition.n();
  if (point.X.size() != 2 * n || point.P.size() != 2 * n)
    throw InputError("doubled phase-space point has wrong dimension");
  PhaseSpacePoint out = point;
  for (auto k : bipartition.members()) {
    std::swap(out.X[k], out.X[n + k]);
    std::swap(out.P[k], out.P[n + k]);
  }
  return out;
}

double doubled_wigner(const GaussianWigner& w, const PhaseSpacePoint& point) {
  const std::size_t n = w.dims();
  if (point.X.size() != 2 * n || point.P.size() != 2 * n)
    throw InputError("doubled phase-space point has wrong dimension");
  const std::span<const double> X(point.X), P(point.P);
  return w(X.first(n), P.first(n)) * w(X.last(n), P.last(n));
}

double wigner_invariance_gap(const GaussianPureState& state, const Bipartition& bipartition,
                             std::span<const PhaseSpacePoint> samples) {
  if (bipartition.n() != state.dims()) throw InputError("bipartition does not match state modes");
  const GaussianWigner w(state);
  double gap = 0.0;
  for (const auto& s : samples)
    gap = std::max(gap, std::abs(doubled_wigner(w, s) - doubled_wigner(w, apply_lambda(s, bipartition))));
  return gap;
}

namespace {

// Gauss-Hermite product rule matched to exp(-v^T K v): nodes are placed along
// the eigenvectors of K with scales 1/sqrt(lambda), so a Gaussian integrand of
// that form becomes exp(-|t|^2) in the rule's own coordinates.
struct AdaptedRule {
  std::vector<Eigen::VectorXd> points;
  std::vector<double> weights;
};

AdaptedRule adapted_rule(const Eigen::MatrixXd& form, int nodes) {
  const auto d = form.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(form);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    throw NumericError("quadrature form is not positive definite");
  const Eigen::MatrixXd axes = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal();
  const AxisRule base = gauss_hermite_axis(nodes, 1.0);
  const double jacobian = 1.0 / es.eigenvalues().cwiseSqrt().prod();

  std::size_t total = 1;
  for (Eigen::Index k = 0; k < d; ++k) total *= base.size();
  AdaptedRule rule;
  rule.points.reserve(total);
  rule.weights.reserve(total);
  Eigen::VectorXd t(d);
  for (std::size_t lin = 0; lin < total; ++lin) {
    std::size_t rem = lin;
    double w = jacobian;
    for (Eigen::Index k = d; k-- > 0;) {
      const std::size_t i = rem % base.size();
      rem /= base.size();
      t(k) = base.nodes[i];
      w *= base.weights[i];
    }
    rule.points.push_back(axes * t);
    rule.weights.push_back(w);
  }
  return rule;
}

}  // namespace

double wigner_normalization(const GaussianPureState& state, int nodes) {
  const GaussianWigner w(state);
  const AdaptedRule rule = adapted_rule(w.phase_space_form(), nodes);
  std::vector<double> terms(rule.points.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& xi = rule.points[i];
    terms[i] = w.at(std::span<const double>(xi.data(), static_cast<std::size_t>(xi.size()))) * rule.weights[i];
  }
  return pairwise_sum(std::span<const double>(terms));
}

WignerFourthMoment wigner_fourth_moment(const GaussianPureState& state,
                                        const Bipartition& bipartition, int nodes) {
  if (state.dims() != 2 || bipartition.n() != 2)
    throw InputError("the phase-space fourth-moment form is defined for two modes only");
  const GaussianWigner w(state);
  const Eigen::Index m = static_cast<Eigen::Index>(bipartition.members().front());
  const Eigen::Index r = static_cast<Eigen::Index>(bipartition.complement().front());

  // W_PT is W with the complement momentum flipped; xi = (x0, x1, p0, p1).
  Eigen::VectorXd flip = Eigen::VectorXd::Ones(4);
  flip(2 + r) = -1.0;
  const Eigen::MatrixXd q = flip.asDiagonal() * w.phase_space_form() * flip.asDiagonal();
  auto w_pt = [&](const Eigen::Vector4d& xi) {
    return std::exp(-xi.dot(q * xi)) / (std::numbers::pi * std::numbers::pi);
  };

  // Marginal over one block `in` at a fixed point of the other block `out`,
  // then 2 pi \int marginal^2 over `out`.
  auto block_purity = [&](Eigen::Index out_mode, Eigen::Index in_mode) {
    const std::array<Eigen::Index, 2> o{out_mode, 2 + out_mode}, i{in_mode, 2 + in_mode};
    Eigen::Matrix2d q_oo, q_oi, q_ii;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        q_oo(a, b) = q(o[a], o[b]);
        q_oi(a, b) = q(o[a], i[b]);
        q_ii(a, b) = q(i[a], i[b]);
      }
    const Eigen::Matrix2d q_ii_inv = q_ii.inverse();
    const Eigen::Matrix2d schur = q_oo - q_oi * q_ii_inv * q_oi.transpose();
    const AdaptedRule inner = adapted_rule(q_ii, nodes);
    const AdaptedRule outer = adapted_rule(2.0 * schur, nodes);

    std::vector<double> terms(outer.points.size());
    std::vector<double> inner_terms(inner.points.size());
    for (std::size_t k = 0; k < outer.points.size(); ++k) {
      const Eigen::Vector2d u = outer.points[k];
      const Eigen::Vector2d center = -q_ii_inv * q_oi.transpose() * u;
      for (std::size_t j = 0; j < inner.points.size(); ++j) {
        const Eigen::Vector2d v = center + inner.points[j];
        Eigen::Vector4d xi;
        xi(o[0]) = u(0);
        xi(o[1]) = u(1);
        xi(i[0]) = v(0);
        xi(i[1]) = v(1);
        inner_terms[j] = w_pt(xi) * inner.weights[j];
      }
      const double marginal = pairwise_sum(std::span<const double>(inner_terms));
      terms[k] = marginal * marginal * outer.weights[k];
    }
    return 2.0 * std::numbers::pi * pairwise_sum(std::span<const double>(terms));
  };

  WignerFourthMoment out;
  out.purity_m = block_purity(m, r);
  out.purity_rest = block_purity(r, m);
  out.trace_pt4 = out.purity_m * out.purity_rest;
  out.concurrence = 2.0 * (1.0 - std::sqrt(out.trace_pt4));
  return out;
}

}  // namespace cvconc
