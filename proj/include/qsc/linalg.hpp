#pragma once

#include <optional>
#include <vector>

#include "qsc/qarith.hpp"

namespace qsc {

/// Dense matrix over Q(q), row major.
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFunc& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const RatFunc& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QMatrix transposed() const;

private:
  std::size_t rows_, cols_;
  std::vector<RatFunc> a_;
};

struct LinearSolveResult {
  std::size_t rank = 0;
  bool consistent = true;                      // meaningful when a rhs was given
  std::vector<RatFunc> solution;               // one solution, when consistent
  std::vector<std::vector<RatFunc>> kernel;    // basis of the null space of A
};

/// Exact Gaussian elimination for A x = b. Pivots are chosen by minimal
/// stored-term count. Inconsistency is reported, not thrown.
LinearSolveResult solve_linear(const QMatrix& A, const std::vector<RatFunc>& b);

std::size_t rank_of(const QMatrix& A);
std::vector<std::vector<RatFunc>> kernel_of(const QMatrix& A);

} // namespace qsc
