#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "cvconc/quadrature.hpp"

namespace cvconc {

/// Discretized wavefunction on a product grid. Amplitudes are row-major with
/// the last axis fastest; the discrete norm sum |a_i|^2 w_i equals 1.
class GridState {
 public:
  static constexpr double kNormTolerance = 1e-9;

  /// Validates the normalization invariant; throws StateError otherwise.
  GridState(ProductRule rule, std::vector<cplx> amplitudes);

  /// Rescales `amplitudes` to unit discrete norm. Throws DegenerateStateError
  /// for an all-zero vector.
  static GridState normalized(ProductRule rule, std::vector<cplx> amplitudes);
  /// Skips the normalization check (shape is still checked). Used where a
  /// caller wants to report the violation instead of failing on load.
  static GridState unchecked(ProductRule rule, std::vector<cplx> amplitudes);

  std::size_t dims() const { return rule_.dims(); }
  std::size_t size() const { return amplitudes_.size(); }
  std::size_t extent(std::size_t axis) const { return rule_.axis(axis).size(); }
  const ProductRule& rule() const { return rule_; }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  const std::vector<double>& weights() const { return weights_; }

  double norm_squared() const;

 private:
  struct Unchecked {};
  GridState(ProductRule rule, std::vector<cplx> amplitudes, Unchecked);

  ProductRule rule_;
  std::vector<cplx> amplitudes_;
  std::vector<double> weights_;
};

/// Amplitude at a per-axis node index; throws InputError when out of range.
cplx evaluate_grid(const GridState& state, std::span<const std::size_t> index);

/// Reorders axes: axis k of the result is axis perm[k] of the input.
GridState permute_axes(const GridState& state, std::span<const std::size_t> perm);

/// psi(x) = N exp(-x^T A x / 2) with A complex symmetric and Re(A) positive
/// definite; N = (det Re A / pi^n)^(1/4).
class GaussianPureState {
 public:
  explicit GaussianPureState(Eigen::MatrixXcd precision);

  /// Two-mode family exp(-(a x1^2 + b x2^2 + c x1 x2)/2).
  static GaussianPureState two_mode(double a, double b, cplx c);

  std::size_t dims() const { return static_cast<std::size_t>(precision_.rows()); }
  const Eigen::MatrixXcd& precision() const { return precision_; }
  double normalization() const { return normalization_; }
  /// 2-norm condition number of Re(A).
  double real_part_condition() const;

 private:
  Eigen::MatrixXcd precision_;
  double normalization_ = 0.0;
};

cplx evaluate_gaussian(const GaussianPureState& state, std::span<const double> x);

/// Raw samples of the Gaussian at every node of `rule`, before renormalization.
std::vector<cplx> sample_gaussian(const GaussianPureState& state, const ProductRule& rule);

struct Discretization {
  static constexpr double kTruncationThreshold = 1e-3;
  static constexpr double kConditionThreshold = 100.0;

  GridState state;
  double mass_defect = 0.0;   // |1 - sum |psi|^2 w| before renormalization
  bool truncated = false;     // mass_defect > kTruncationThreshold
  double condition = 1.0;     // cond(Re A)
  bool ill_conditioned = false;
};

Discretization discretize(const GaussianPureState& state, const ProductRule& rule);
Discretization discretize(const GaussianPureState& state, std::span<const GridAxis> axes);

/// Gauss-Hermite product rule with one scale for every axis, set by the
/// widest direction of |psi|^2: 1 / sqrt(lambda_min(Re A)).
ProductRule hermite_rule_for(const GaussianPureState& state, int points_per_axis);

/// Subset M of the axes {0..n-1} with 1 <= |M| <= n-1. The complement is
/// always derived.
class Bipartition {
 public:
  Bipartition(std::size_t n, std::vector<std::size_t> members);

  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::vector<std::size_t> complement() const;
  bool contains(std::size_t axis) const;
  Bipartition swapped() const { return Bipartition(n_, complement()); }

 private:
  std::size_t n_;
  std::vector<std::size_t> members_;
};

/// Diagonal 0/1 mask of M and the n x 2n selectors of the two copies.
struct ProjectionMasks {
  Eigen::MatrixXd m_mask;
  Eigen::MatrixXd n1;
  Eigen::MatrixXd n2;
};

ProjectionMasks build_masks(const Bipartition& bipartition);

}  // namespace cvconc
