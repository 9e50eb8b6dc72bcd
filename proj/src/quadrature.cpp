#include "cvconc/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cvconc/error.hpp"

namespace cvconc {

void GridAxis::validate() const {
  if (!(max > min)) throw InputError("grid axis requires max > min");
  if (points < 2) throw InputError("grid axis requires at least 2 points");
}

AxisRule AxisRule::midpoint(const GridAxis& axis) {
  axis.validate();
  AxisRule rule;
  rule.nodes.resize(axis.points);
  rule.weights.assign(axis.points, axis.spacing());
  for (int i = 0; i < axis.points; ++i) rule.nodes[i] = axis.node(i);
  rule.uniform = axis;
  return rule;
}

ProductRule::ProductRule(std::vector<AxisRule> axes) : axes_(std::move(axes)) {
  strides_.assign(axes_.size(), 1);
  total_ = 1;
  for (std::size_t k = axes_.size(); k-- > 0;) {
    const auto& a = axes_[k];
    if (a.nodes.empty() || a.nodes.size() != a.weights.size())
      throw InputError("axis rule must have matching, non-empty node and weight lists");
    for (double w : a.weights)
      if (!(w > 0.0)) throw InputError("quadrature weights must be strictly positive");
    strides_[k] = total_;
    total_ *= a.size();
  }
}

double ProductRule::weight(std::size_t linear) const {
  double w = 1.0;
  for (std::size_t k = axes_.size(); k-- > 0;) {
    const std::size_t n = axes_[k].size();
    w *= axes_[k].weights[linear % n];
    linear /= n;
  }
  return w;
}

std::vector<double> ProductRule::coordinates(std::size_t linear) const {
  std::vector<double> x(axes_.size());
  for (std::size_t k = axes_.size(); k-- > 0;) {
    const std::size_t n = axes_[k].size();
    x[k] = axes_[k].nodes[linear % n];
    linear /= n;
  }
  return x;
}

std::vector<std::size_t> ProductRule::unravel(std::size_t linear) const {
  std::vector<std::size_t> idx(axes_.size());
  for (std::size_t k = axes_.size(); k-- > 0;) {
    const std::size_t n = axes_[k].size();
    idx[k] = linear % n;
    linear /= n;
  }
  return idx;
}

std::size_t ProductRule::ravel(std::span<const std::size_t> index) const {
  if (index.size() != axes_.size()) throw InputError("index rank does not match rule dimension");
  std::size_t linear = 0;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (index[k] >= axes_[k].size()) {
      std::ostringstream os;
      os << "index " << index[k] << " out of range for axis " << k << " (size " << axes_[k].size()
         << ")";
      throw InputError(os.str());
    }
    linear += index[k] * strides_[k];
  }
  return linear;
}

std::vector<double> ProductRule::all_weights() const {
  std::vector<double> w(total_, 1.0);
  std::size_t block = total_;
  for (const auto& a : axes_) {
    const std::size_t n = a.size();
    block /= n;
    for (std::size_t i = 0; i < total_; ++i) w[i] *= a.weights[(i / block) % n];
  }
  return w;
}

bool ProductRule::all_midpoint() const {
  for (const auto& a : axes_)
    if (!a.uniform) return false;
  return true;
}

ProductRule midpoint_rule(std::span<const GridAxis> axes) {
  std::vector<AxisRule> rules;
  rules.reserve(axes.size());
  for (const auto& a : axes) rules.push_back(AxisRule::midpoint(a));
  return ProductRule(std::move(rules));
}

AxisRule gauss_hermite_axis(int points, double scale) {
  if (points < 1) throw InputError("Gauss-Hermite rule needs at least one node");
  if (!(scale > 0.0)) throw InputError("Gauss-Hermite scale must be positive");

  // Newton iteration on orthonormal Hermite functions; yields weights with
  // small relative error even in the far tails, which matters once the
  // exp(x^2) factor is folded back in.
  const int n = points;
  std::vector<double> x(n), w(n);
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * x[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * x[1];
    else
      z = 2.0 * z - x[i - 2];

    double pp = 0.0;
    for (int its = 0; its < 200; ++its) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (pp * pp);
    w[n - 1 - i] = w[i];
  }
  if (n % 2 == 1) x[n / 2] = 0.0;

  AxisRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Nodes ascending.
  for (int i = 0; i < n; ++i) {
    const double t = x[n - 1 - i];
    rule.nodes[i] = scale * t;
    rule.weights[i] = scale * w[n - 1 - i] * std::exp(t * t);
  }
  return rule;
}

ProductRule gauss_hermite_rule(int points_per_axis, std::span<const double> scales) {
  std::vector<AxisRule> rules;
  rules.reserve(scales.size());
  for (double s : scales) rules.push_back(gauss_hermite_axis(points_per_axis, s));
  return ProductRule(std::move(rules));
}

cplx integrate(const ProductRule& rule, const Integrand& f) {
  const std::size_t total = rule.total_nodes();
  std::vector<cplx> terms(total);
  const auto weights = rule.all_weights();
  for (std::size_t i = 0; i < total; ++i) {
    const auto x = rule.coordinates(i);
    const cplx v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream os;
      os << "non-finite integrand at node (";
      for (std::size_t k = 0; k < x.size(); ++k) os << (k ? ", " : "") << x[k];
      os << ")";
      throw NumericError(os.str());
    }
    terms[i] = v * weights[i];
  }
  return pairwise_sum(std::span<const cplx>(terms));
}

namespace {

template <class T>
T pairwise_impl(const T* v, std::size_t n) {
  if (n <= 16) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_impl(v, half) + pairwise_impl(v + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_impl(values.data(), values.size());
}

cplx pairwise_sum(std::span<const cplx> values) {
  return pairwise_impl(values.data(), values.size());
}

}  // namespace cvconc
