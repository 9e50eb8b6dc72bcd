#include "cvconc/block.hpp"

#include "cvconc/error.hpp"

namespace cvconc {

BlockSplit split(const GridState& state, const Bipartition& bipartition) {
  if (bipartition.n() != state.dims())
    throw InputError("bipartition size does not match the number of state axes");
  const auto members = bipartition.members();
  const auto rest = bipartition.complement();
  const auto& rule = state.rule();

  std::vector<AxisRule> row_axes, col_axes;
  for (auto k : members) row_axes.push_back(rule.axis(k));
  for (auto k : rest) col_axes.push_back(rule.axis(k));

  BlockSplit s;
  s.row_rule = ProductRule(std::move(row_axes));
  s.col_rule = ProductRule(std::move(col_axes));
  s.rows = s.row_rule.total_nodes();
  s.cols = s.col_rule.total_nodes();
  s.row_w = s.row_rule.all_weights();
  s.col_w = s.col_rule.all_weights();
  s.amp.resize(state.size());
  s.row_of.resize(state.size());
  s.col_of.resize(state.size());
  s.linear_of.resize(state.size());

  std::vector<std::size_t> ridx(members.size()), cidx(rest.size());
  for (std::size_t lin = 0; lin < state.size(); ++lin) {
    const auto idx = rule.unravel(lin);
    for (std::size_t k = 0; k < members.size(); ++k) ridx[k] = idx[members[k]];
    for (std::size_t k = 0; k < rest.size(); ++k) cidx[k] = idx[rest[k]];
    const std::size_t r = s.row_rule.ravel(ridx);
    const std::size_t c = s.col_rule.ravel(cidx);
    s.row_of[lin] = r;
    s.col_of[lin] = c;
    s.linear_of[r * s.cols + c] = lin;
    s.amp[r * s.cols + c] = state.amplitudes()[lin];
  }
  return s;
}

LambdaPermutation::LambdaPermutation(const BlockSplit& split)
    : grid_(split.rows * split.cols),
      cols_(split.cols),
      row_of_(split.row_of),
      col_of_(split.col_of),
      linear_of_(split.linear_of) {}

}  // namespace cvconc
