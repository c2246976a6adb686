#include "qsc/linalg.hpp"

#include <cassert>

namespace qsc {

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {

// Row-reduce [A | b] in place. Returns pivot column list. When b is null the
// rhs is ignored.
std::vector<std::size_t> row_reduce(QMatrix& A, std::vector<RatFunc>* b) {
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    // pick the nonzero pivot with the fewest stored terms
    std::size_t best = m;
    std::size_t best_size = 0;
    for (std::size_t i = row; i < m; ++i) {
      if (A.at(i, col).is_zero()) continue;
      std::size_t s = A.at(i, col).size();
      if (best == m || s < best_size) { best = i; best_size = s; }
    }
    if (best == m) continue;
    if (best != row) {
      for (std::size_t j = col; j < n; ++j) std::swap(A.at(row, j), A.at(best, j));
      if (b) std::swap((*b)[row], (*b)[best]);
    }
    RatFunc inv = A.at(row, col).inv();
    A.at(row, col) = RatFunc(1);
    for (std::size_t j = col + 1; j < n; ++j)
      if (!A.at(row, j).is_zero()) A.at(row, j) *= inv;
    if (b) (*b)[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || A.at(i, col).is_zero()) continue;
      RatFunc f = A.at(i, col);
      A.at(i, col) = RatFunc();
      for (std::size_t j = col + 1; j < n; ++j)
        if (!A.at(row, j).is_zero()) A.at(i, j) -= f * A.at(row, j);
      if (b) (*b)[i] -= f * (*b)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

LinearSolveResult solve_linear(const QMatrix& A, const std::vector<RatFunc>& b) {
  assert(b.empty() || b.size() == A.rows());
  QMatrix R = A;
  std::vector<RatFunc> rhs = b;
  std::vector<RatFunc>* prhs = rhs.empty() ? nullptr : &rhs;
  std::vector<std::size_t> pivots = row_reduce(R, prhs);

  LinearSolveResult res;
  res.rank = pivots.size();

  const std::size_t n = A.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  if (prhs) {
    for (std::size_t i = res.rank; i < A.rows(); ++i)
      if (!rhs[i].is_zero()) { res.consistent = false; break; }
    if (res.consistent) {
      res.solution.assign(n, RatFunc());
      for (std::size_t i = 0; i < pivots.size(); ++i) res.solution[pivots[i]] = rhs[i];
    }
  }

  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<RatFunc> v(n);
    v[c] = RatFunc(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R.at(i, c);
    res.kernel.push_back(std::move(v));
  }
  return res;
}

std::size_t rank_of(const QMatrix& A) {
  QMatrix R = A;
  return row_reduce(R, nullptr).size();
}

std::vector<std::vector<RatFunc>> kernel_of(const QMatrix& A) {
  return solve_linear(A, {}).kernel;
}

} // namespace qsc
