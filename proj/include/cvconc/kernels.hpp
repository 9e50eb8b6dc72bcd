#pragma once

// Hot loops behind the concurrence routes. Every kernel has an OpenMP version
// and a plain serial reference in kernels::serial.
//
// Parallel kernels reduce one partial sum per outer index and combine the
// partials with pairwise summation, so their result does not depend on the
// thread count. Serial references accumulate into a single running sum.

#include <cstddef>

#include "cvconc/block.hpp"

namespace cvconc::kernels {

/// sum over (y', y, x, x') of |phi(y',x) phi(y,x') - phi(y',x') phi(y,x)|^2
/// times the four weights. All four ranges are full (unordered).
double wedge_quartic_sum(const BlockView& v);

/// sum over (y', y) of |sum_x phi(y',x) conj(phi(y,x)) w_x|^2 w_y w_y'.
double overlap_purity(const BlockView& v);

/// sum over doubled-grid X of Phi(X) conj(Phi(Lambda X)) W(X) with
/// Phi(X) = phi(x1) phi(x2).
cplx lambda_overlap(const cplx* amp, const double* weights, const LambdaPermutation& perm);

struct WedgeMax {
  double weighted_sq = 0.0;  // |coefficient|^2 * w_y w_y' w_x w_x'
  std::size_t row_a = 0, row_b = 0;  // row_a < row_b
  std::size_t col_a = 0, col_b = 0;  // col_a < col_b
};

/// Largest weighted squared wedge coefficient over row pairs and ordered
/// column pairs. Ties resolve to the lexicographically first pair.
WedgeMax max_wedge_coefficient(const BlockView& v);

namespace serial {
double wedge_quartic_sum(const BlockView& v);
double overlap_purity(const BlockView& v);
cplx lambda_overlap(const cplx* amp, const double* weights, const LambdaPermutation& perm);
WedgeMax max_wedge_coefficient(const BlockView& v);
}  // namespace serial

}  // namespace cvconc::kernels
