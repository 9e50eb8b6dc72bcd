#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace cvconc {

using cplx = std::complex<double>;

/// Uniform axis on [min, max] discretized by the midpoint rule.
struct GridAxis {
  double min = 0.0;
  double max = 1.0;
  int points = 2;

  double spacing() const { return (max - min) / points; }
  double node(int i) const { return min + (i + 0.5) * spacing(); }
  /// Throws InputError unless max > min and points >= 2.
  void validate() const;

  friend bool operator==(const GridAxis&, const GridAxis&) = default;
};

/// One-dimensional node/weight set. `uniform` is set for midpoint axes so the
/// original GridAxis survives serialization.
struct AxisRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::optional<GridAxis> uniform;

  std::size_t size() const { return nodes.size(); }

  static AxisRule midpoint(const GridAxis& axis);
};

/// Tensor product of per-axis rules. Linear node order is row-major with the
/// last axis fastest.
class ProductRule {
 public:
  ProductRule() = default;
  explicit ProductRule(std::vector<AxisRule> axes);

  std::size_t dims() const { return axes_.size(); }
  std::size_t total_nodes() const { return total_; }
  const AxisRule& axis(std::size_t k) const { return axes_[k]; }
  const std::vector<AxisRule>& axes() const { return axes_; }

  /// Product weight at a linear node index.
  double weight(std::size_t linear) const;
  /// Coordinates of a linear node index.
  std::vector<double> coordinates(std::size_t linear) const;
  /// Per-axis indices of a linear node index.
  std::vector<std::size_t> unravel(std::size_t linear) const;
  std::size_t ravel(std::span<const std::size_t> index) const;
  /// Product weights for every node, in linear order.
  std::vector<double> all_weights() const;

  bool all_midpoint() const;

 private:
  std::vector<AxisRule> axes_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 0;
};

ProductRule midpoint_rule(std::span<const GridAxis> axes);

/// Gauss-Hermite rule rescaled so that nodes/weights integrate plain
/// integrands: weights carry the exp((x/s)^2) factor back, so
/// sum_i w_i f(x_i) is exact for f(x) = exp(-(x/s)^2) p(x), deg p <= 2N-1.
AxisRule gauss_hermite_axis(int points, double scale);
ProductRule gauss_hermite_rule(int points_per_axis, std::span<const double> scales);

using Integrand = std::function<cplx(std::span<const double>)>;

/// Sum of f(node) * weight over the product rule. Throws NumericError with the
/// offending coordinates when f returns a non-finite value.
cplx integrate(const ProductRule& rule, const Integrand& f);

/// Pairwise (cascade) summation; error grows as O(log n) rather than O(n).
double pairwise_sum(std::span<const double> values);
cplx pairwise_sum(std::span<const cplx> values);

}  // namespace cvconc
