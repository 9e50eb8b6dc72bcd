#include "cvconc/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cvconc/error.hpp"

namespace cvconc {

GridState::GridState(ProductRule rule, std::vector<cplx> amplitudes, Unchecked)
    : rule_(std::move(rule)), amplitudes_(std::move(amplitudes)) {
  if (rule_.dims() < 1) throw InputError("grid state needs at least one axis");
  if (amplitudes_.size() != rule_.total_nodes()) {
    std::ostringstream os;
    os << "amplitude count " << amplitudes_.size() << " does not match grid size "
       << rule_.total_nodes();
    throw InputError(os.str());
  }
  weights_ = rule_.all_weights();
}

GridState::GridState(ProductRule rule, std::vector<cplx> amplitudes)
    : GridState(std::move(rule), std::move(amplitudes), Unchecked{}) {
  const double norm = norm_squared();
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << "grid state is not normalized: sum |a|^2 w = " << norm;
    throw StateError(os.str());
  }
}

GridState GridState::normalized(ProductRule rule, std::vector<cplx> amplitudes) {
  GridState s(std::move(rule), std::move(amplitudes), Unchecked{});
  const double norm = s.norm_squared();
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw DegenerateStateError("cannot normalize a zero or non-finite amplitude vector");
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : s.amplitudes_) a *= scale;
  return s;
}

GridState GridState::unchecked(ProductRule rule, std::vector<cplx> amplitudes) {
  return GridState(std::move(rule), std::move(amplitudes), Unchecked{});
}

double GridState::norm_squared() const {
  std::vector<double> terms(amplitudes_.size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = std::norm(amplitudes_[i]) * weights_[i];
  return pairwise_sum(std::span<const double>(terms));
}

cplx evaluate_grid(const GridState& state, std::span<const std::size_t> index) {
  return state.amplitudes()[state.rule().ravel(index)];
}

GridState permute_axes(const GridState& state, std::span<const std::size_t> perm) {
  const std::size_t n = state.dims();
  if (perm.size() != n) throw InputError("axis permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw InputError("invalid axis permutation");
    seen[p] = true;
  }
  std::vector<AxisRule> axes;
  for (auto p : perm) axes.push_back(state.rule().axis(p));
  ProductRule rule(std::move(axes));
  std::vector<cplx> amps(state.size());
  std::vector<std::size_t> src(n);
  for (std::size_t lin = 0; lin < amps.size(); ++lin) {
    const auto dst = rule.unravel(lin);
    for (std::size_t k = 0; k < n; ++k) src[perm[k]] = dst[k];
    amps[lin] = state.amplitudes()[state.rule().ravel(src)];
  }
  return GridState::unchecked(std::move(rule), std::move(amps));
}

GaussianPureState::GaussianPureState(Eigen::MatrixXcd precision) : precision_(std::move(precision)) {
  if (precision_.rows() < 1 || precision_.rows() != precision_.cols())
    throw InputError("precision matrix must be square and non-empty");
  const double scale = std::max(1.0, precision_.cwiseAbs().maxCoeff());
  if ((precision_ - precision_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InputError("precision matrix must be symmetric (A = A^T)");
  if (!precision_.allFinite()) throw InputError("precision matrix has non-finite entries");
  const Eigen::MatrixXd re = precision_.real();
  Eigen::LLT<Eigen::MatrixXd> llt(re);
  if (llt.info() != Eigen::Success)
    throw InputError("real part of the precision matrix is not positive definite");
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < re.rows(); ++i) log_det += 2.0 * std::log(llt.matrixL()(i, i));
  const double n = static_cast<double>(re.rows());
  normalization_ = std::exp(0.25 * (log_det - n * std::log(std::numbers::pi)));
}

GaussianPureState GaussianPureState::two_mode(double a, double b, cplx c) {
  Eigen::MatrixXcd A(2, 2);
  A << a, c / 2.0, c / 2.0, b;
  return GaussianPureState(A);
}

double GaussianPureState::real_part_condition() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(precision_.real(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return ev.maxCoeff() / ev.minCoeff();
}

cplx evaluate_gaussian(const GaussianPureState& state, std::span<const double> x) {
  const auto& A = state.precision();
  const std::size_t n = state.dims();
  if (x.size() != n) throw InputError("coordinate vector has wrong dimension");
  cplx q = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q += x[i] * A(i, j) * x[j];
  return state.normalization() * std::exp(-0.5 * q);
}

std::vector<cplx> sample_gaussian(const GaussianPureState& state, const ProductRule& rule) {
  if (rule.dims() != state.dims()) throw InputError("rule dimension does not match Gaussian modes");
  std::vector<cplx> amps(rule.total_nodes());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const auto x = rule.coordinates(i);
    amps[i] = evaluate_gaussian(state, x);
  }
  return amps;
}

Discretization discretize(const GaussianPureState& state, const ProductRule& rule) {
  auto raw = sample_gaussian(state, rule);
  auto unnormalized = GridState::unchecked(rule, raw);
  const double mass = unnormalized.norm_squared();
  Discretization d{GridState::normalized(rule, std::move(raw))};
  d.mass_defect = std::abs(1.0 - mass);
  d.truncated = d.mass_defect > Discretization::kTruncationThreshold;
  d.condition = state.real_part_condition();
  d.ill_conditioned = d.condition > Discretization::kConditionThreshold;
  return d;
}

Discretization discretize(const GaussianPureState& state, std::span<const GridAxis> axes) {
  if (axes.size() != state.dims()) throw InputError("axis count does not match Gaussian modes");
  return discretize(state, midpoint_rule(axes));
}

ProductRule hermite_rule_for(const GaussianPureState& state, int points_per_axis) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(state.precision().real(), Eigen::EigenvaluesOnly);
  const std::vector<double> scales(state.dims(), 1.0 / std::sqrt(es.eigenvalues().minCoeff()));
  return gauss_hermite_rule(points_per_axis, scales);
}

Bipartition::Bipartition(std::size_t n, std::vector<std::size_t> members)
    : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw InputError("bipartition members must be distinct");
  if (n_ < 2) throw InputError("a bipartition needs at least two degrees of freedom");
  for (auto m : members_)
    if (m >= n_) throw InputError("bipartition member out of range");
  if (members_.empty() || members_.size() >= n_)
    throw InputError("bipartition requires 1 <= |M| <= n-1");
}

std::vector<std::size_t> Bipartition::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n_; ++k)
    if (!contains(k)) out.push_back(k);
  return out;
}

bool Bipartition::contains(std::size_t axis) const {
  return std::binary_search(members_.begin(), members_.end(), axis);
}

ProjectionMasks build_masks(const Bipartition& bipartition) {
  const auto n = static_cast<Eigen::Index>(bipartition.n());
  ProjectionMasks masks;
  masks.m_mask = Eigen::MatrixXd::Zero(n, n);
  for (auto m : bipartition.members()) masks.m_mask(m, m) = 1.0;
  masks.n1 = Eigen::MatrixXd::Zero(n, 2 * n);
  masks.n2 = Eigen::MatrixXd::Zero(n, 2 * n);
  masks.n1.leftCols(n).setIdentity();
  masks.n2.rightCols(n).setIdentity();
  return masks;
}

}  // namespace cvconc
