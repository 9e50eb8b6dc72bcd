#pragma once

#include <cstddef>
#include <vector>

#include "cvconc/quadrature.hpp"
#include "cvconc/state.hpp"

namespace cvconc {

/// A GridState viewed as a (G_M x G_Mbar) matrix: rows run over the M-block
/// nodes, columns over the complement, both in row-major order of their own
/// axes (increasing axis number).
struct BlockSplit {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> amp;  // raw amplitudes, row-major rows x cols
  std::vector<double> row_w;
  std::vector<double> col_w;
  std::vector<std::size_t> row_of;     // grid linear index -> row
  std::vector<std::size_t> col_of;     // grid linear index -> column
  std::vector<std::size_t> linear_of;  // row * cols + col -> grid linear index
  ProductRule row_rule;
  ProductRule col_rule;

  cplx at(std::size_t r, std::size_t c) const { return amp[r * cols + c]; }
};

BlockSplit split(const GridState& state, const Bipartition& bipartition);

/// Non-owning view consumed by the numeric kernels.
struct BlockView {
  const cplx* amp;
  const double* row_w;
  const double* col_w;
  std::size_t rows;
  std::size_t cols;

  static BlockView of(const BlockSplit& s) {
    return {s.amp.data(), s.row_w.data(), s.col_w.data(), s.rows, s.cols};
  }
};

/// The involution on doubled-grid indices X = i1 * G + i2 that swaps the
/// M-components of the two copies.
class LambdaPermutation {
 public:
  explicit LambdaPermutation(const BlockSplit& split);

  std::size_t grid_size() const { return grid_; }
  std::size_t doubled_size() const { return grid_ * grid_; }
  std::size_t apply(std::size_t doubled) const {
    const std::size_t i1 = doubled / grid_;
    const std::size_t i2 = doubled % grid_;
    const std::size_t j1 = linear_of_[row_of_[i2] * cols_ + col_of_[i1]];
    const std::size_t j2 = linear_of_[row_of_[i1] * cols_ + col_of_[i2]];
    return j1 * grid_ + j2;
  }

 private:
  std::size_t grid_;
  std::size_t cols_;
  std::vector<std::size_t> row_of_;
  std::vector<std::size_t> col_of_;
  std::vector<std::size_t> linear_of_;
};

}  // namespace cvconc
