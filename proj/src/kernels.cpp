#include "cvconc/kernels.hpp"

#include <vector>

namespace cvconc::kernels {

namespace {

inline double quartic_row(const BlockView& v, std::size_t yp) {
  const cplx* a = v.amp + yp * v.cols;
  double row_sum = 0.0;
  for (std::size_t y = 0; y < v.rows; ++y) {
    const cplx* b = v.amp + y * v.cols;
    double s = 0.0;
    for (std::size_t x = 0; x < v.cols; ++x) {
      double sx = 0.0;
      for (std::size_t xp = 0; xp < v.cols; ++xp) {
        const cplx d = a[x] * b[xp] - a[xp] * b[x];
        sx += std::norm(d) * v.col_w[xp];
      }
      s += sx * v.col_w[x];
    }
    row_sum += s * v.row_w[y];
  }
  return row_sum * v.row_w[yp];
}

inline double overlap_row(const BlockView& v, std::size_t yp) {
  const cplx* a = v.amp + yp * v.cols;
  double row_sum = 0.0;
  for (std::size_t y = 0; y < v.rows; ++y) {
    const cplx* b = v.amp + y * v.cols;
    cplx k = 0.0;
    for (std::size_t x = 0; x < v.cols; ++x) k += a[x] * std::conj(b[x]) * v.col_w[x];
    row_sum += std::norm(k) * v.row_w[y];
  }
  return row_sum * v.row_w[yp];
}

inline cplx lambda_row(const cplx* amp, const double* w, const LambdaPermutation& perm,
                       std::size_t i1) {
  const std::size_t g = perm.grid_size();
  cplx s = 0.0;
  for (std::size_t i2 = 0; i2 < g; ++i2) {
    const std::size_t x = i1 * g + i2;
    const std::size_t lx = perm.apply(x);
    const cplx phi = amp[i1] * amp[i2];
    const cplx phi_l = amp[lx / g] * amp[lx % g];
    s += phi * std::conj(phi_l) * (w[i1] * w[i2]);
  }
  return s;
}

inline WedgeMax wedge_max_row(const BlockView& v, std::size_t ya) {
  WedgeMax best;
  best.row_a = ya;
  best.row_b = ya;
  const cplx* a = v.amp + ya * v.cols;
  for (std::size_t yb = ya + 1; yb < v.rows; ++yb) {
    const cplx* b = v.amp + yb * v.cols;
    const double wy = v.row_w[ya] * v.row_w[yb];
    for (std::size_t xa = 0; xa < v.cols; ++xa) {
      for (std::size_t xb = xa + 1; xb < v.cols; ++xb) {
        const cplx d = a[xa] * b[xb] - a[xb] * b[xa];
        const double m = std::norm(d) * wy * v.col_w[xa] * v.col_w[xb];
        if (m > best.weighted_sq) best = {m, ya, yb, xa, xb};
      }
    }
  }
  return best;
}

}  // namespace

double wedge_quartic_sum(const BlockView& v) {
  std::vector<double> partial(v.rows);
  const auto rows = static_cast<long long>(v.rows);
#pragma omp parallel for schedule(dynamic)
  for (long long yp = 0; yp < rows; ++yp) partial[yp] = quartic_row(v, static_cast<std::size_t>(yp));
  return pairwise_sum(std::span<const double>(partial));
}

double overlap_purity(const BlockView& v) {
  std::vector<double> partial(v.rows);
  const auto rows = static_cast<long long>(v.rows);
#pragma omp parallel for schedule(dynamic)
  for (long long yp = 0; yp < rows; ++yp) partial[yp] = overlap_row(v, static_cast<std::size_t>(yp));
  return pairwise_sum(std::span<const double>(partial));
}

cplx lambda_overlap(const cplx* amp, const double* weights, const LambdaPermutation& perm) {
  std::vector<cplx> partial(perm.grid_size());
  const auto g = static_cast<long long>(perm.grid_size());
#pragma omp parallel for schedule(dynamic)
  for (long long i1 = 0; i1 < g; ++i1)
    partial[i1] = lambda_row(amp, weights, perm, static_cast<std::size_t>(i1));
  return pairwise_sum(std::span<const cplx>(partial));
}

WedgeMax max_wedge_coefficient(const BlockView& v) {
  std::vector<WedgeMax> partial(v.rows);
  const auto rows = static_cast<long long>(v.rows);
#pragma omp parallel for schedule(dynamic)
  for (long long ya = 0; ya < rows; ++ya) partial[ya] = wedge_max_row(v, static_cast<std::size_t>(ya));
  WedgeMax best;
  for (const auto& p : partial)
    if (p.weighted_sq > best.weighted_sq) best = p;
  return best;
}

namespace serial {

double wedge_quartic_sum(const BlockView& v) {
  double s = 0.0;
  for (std::size_t yp = 0; yp < v.rows; ++yp)
    for (std::size_t y = 0; y < v.rows; ++y)
      for (std::size_t x = 0; x < v.cols; ++x)
        for (std::size_t xp = 0; xp < v.cols; ++xp) {
          const cplx d = v.amp[yp * v.cols + x] * v.amp[y * v.cols + xp] -
                         v.amp[yp * v.cols + xp] * v.amp[y * v.cols + x];
          s += std::norm(d) * v.row_w[yp] * v.row_w[y] * v.col_w[x] * v.col_w[xp];
        }
  return s;
}

double overlap_purity(const BlockView& v) {
  double s = 0.0;
  for (std::size_t yp = 0; yp < v.rows; ++yp)
    for (std::size_t y = 0; y < v.rows; ++y) {
      cplx k = 0.0;
      for (std::size_t x = 0; x < v.cols; ++x)
        k += v.amp[yp * v.cols + x] * std::conj(v.amp[y * v.cols + x]) * v.col_w[x];
      s += std::norm(k) * v.row_w[yp] * v.row_w[y];
    }
  return s;
}

cplx lambda_overlap(const cplx* amp, const double* weights, const LambdaPermutation& perm) {
  const std::size_t g = perm.grid_size();
  cplx s = 0.0;
  for (std::size_t x = 0; x < perm.doubled_size(); ++x) {
    const std::size_t lx = perm.apply(x);
    s += amp[x / g] * amp[x % g] * std::conj(amp[lx / g] * amp[lx % g]) *
         (weights[x / g] * weights[x % g]);
  }
  return s;
}

WedgeMax max_wedge_coefficient(const BlockView& v) {
  WedgeMax best;
  for (std::size_t ya = 0; ya < v.rows; ++ya)
    for (std::size_t yb = ya + 1; yb < v.rows; ++yb)
      for (std::size_t xa = 0; xa < v.cols; ++xa)
        for (std::size_t xb = xa + 1; xb < v.cols; ++xb) {
          const cplx d = v.amp[ya * v.cols + xa] * v.amp[yb * v.cols + xb] -
                         v.amp[ya * v.cols + xb] * v.amp[yb * v.cols + xa];
          const double m = std::norm(d) * (v.row_w[ya] * v.row_w[yb]) * v.col_w[xa] * v.col_w[xb];
          if (m > best.weighted_sq) best = {m, ya, yb, xa, xb};
        }
  return best;
}

}  // namespace serial

}  // namespace cvconc::kernels
