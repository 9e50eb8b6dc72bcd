#include "cvconc/wedge.hpp"

#include <algorithm>
#include <cmath>

#include "cvconc/error.hpp"

namespace cvconc {

Bivector::Bivector(std::vector<cplx> coefficients, std::vector<double> weights)
    : coefficients_(std::move(coefficients)), weights_(std::move(weights)) {
  const std::size_t n = weights_.size();
  if (coefficients_.size() != n * (n - (n ? 1 : 0)) / 2)
    throw InputError("bivector coefficient count must be n(n-1)/2");
}

cplx Bivector::coefficient(std::size_t i, std::size_t j) const {
  const std::size_t n = dimension();
  if (i >= n || j >= n) throw InputError("bivector index out of range");
  if (i == j) return 0.0;
  if (i < j) return coefficients_[offset(i, j, n)];
  return -coefficients_[offset(j, i, n)];
}

Bivector wedge(std::span<const cplx> f, std::span<const cplx> g, std::span<const double> weights) {
  const std::size_t n = f.size();
  if (g.size() != n || weights.size() != n)
    throw InputError("wedge requires vectors and weights of equal length");
  std::vector<cplx> c;
  c.reserve(n * (n ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c.push_back(f[i] * g[j] - f[j] * g[i]);
  return Bivector(std::move(c), std::vector<double>(weights.begin(), weights.end()));
}

double bivector_p_norm(const Bivector& b, PNorm p) {
  const std::size_t n = b.dimension();
  const auto c = b.coefficients();
  const auto w = b.weights();
  if (p == PNorm::kInfinity) {
    double m = 0.0;
    for (const auto& v : c) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      const double mag = std::abs(c[k]);
      s += (p == PNorm::kOne ? mag : mag * mag) * w[i] * w[j];
    }
  return p == PNorm::kOne ? s : std::sqrt(s);
}

double bivector_p_norm(const Bivector& b, int p) {
  switch (p) {
    case 1: return bivector_p_norm(b, PNorm::kOne);
    case 2: return bivector_p_norm(b, PNorm::kTwo);
    case 0: return bivector_p_norm(b, PNorm::kInfinity);
    default: throw InputError("unsupported bivector norm: p must be 1, 2 or infinity");
  }
}

double lagrange_identity_gap(std::span<const cplx> f, std::span<const cplx> g,
                             std::span<const double> weights) {
  const std::size_t n = f.size();
  if (g.size() != n || weights.size() != n)
    throw InputError("Lagrange identity requires vectors and weights of equal length");
  double ff = 0.0, gg = 0.0;
  cplx fg = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ff += std::norm(f[i]) * weights[i];
    gg += std::norm(g[i]) * weights[i];
    fg += f[i] * std::conj(g[i]) * weights[i];
  }
  double rhs = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      rhs += std::norm(f[i] * g[j] - f[j] * g[i]) * weights[i] * weights[j];
  return (ff * gg - std::norm(fg)) - rhs;
}

}  // namespace cvconc
