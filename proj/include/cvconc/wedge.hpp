#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cvconc/quadrature.hpp"

namespace cvconc {

/// Grade-2 element over a discretized basis. Only strictly ordered pairs
/// (i, j), j > i, are stored; pair (i, j) lives at a packed triangular offset.
class Bivector {
 public:
  Bivector(std::vector<cplx> coefficients, std::vector<double> weights);

  std::size_t dimension() const { return weights_.size(); }
  std::span<const cplx> coefficients() const { return coefficients_; }
  std::span<const double> weights() const { return weights_; }

  /// Coefficient of |x_i> ^ |x_j>; antisymmetric, zero on the diagonal.
  cplx coefficient(std::size_t i, std::size_t j) const;

  static std::size_t offset(std::size_t i, std::size_t j, std::size_t n) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

 private:
  std::vector<cplx> coefficients_;
  std::vector<double> weights_;
};

/// coefficient(i, j) = f_i g_j - f_j g_i.
Bivector wedge(std::span<const cplx> f, std::span<const cplx> g, std::span<const double> weights);

enum class PNorm { kOne, kTwo, kInfinity };

/// Weighted p-norm over ordered pairs: (sum |c_ij|^p w_i w_j)^(1/p); the
/// infinity norm is the plain max |c_ij|.
double bivector_p_norm(const Bivector& b, PNorm p);
/// Integer overload for CLI-facing code; accepts 1, 2 and 0 (meaning infinity).
double bivector_p_norm(const Bivector& b, int p);

/// (|f|^2 |g|^2 - |<f,g>|^2) - sum_{j>i} |f_i g_j - f_j g_i|^2 w_i w_j.
/// Exact algebra makes this zero up to round-off.
double lagrange_identity_gap(std::span<const cplx> f, std::span<const cplx> g,
                             std::span<const double> weights);

}  // namespace cvconc
