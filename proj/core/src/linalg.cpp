#include "composites/linalg.hpp"

namespace composites {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_->zero()) {}

std::vector<std::size_t> Matrix::rref() {
  const auto& F = field_;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = rows_;
    for (std::size_t r = row; r < rows_; ++r) {
      if (!F->is_zero(at(r, col))) {
        sel = r;
        break;
      }
    }
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
    FieldElem inv = F->inv(at(row, col));
    for (std::size_t c = col; c < cols_; ++c) at(row, c) = F->mul(at(row, c), inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || F->is_zero(at(r, col))) continue;
      FieldElem factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        at(r, c) = F->sub(at(r, c), F->mul(factor, at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

std::optional<std::vector<FieldElem>> solve(const Matrix& A, const std::vector<FieldElem>& b) {
  const auto& F = A.field();
  Matrix aug(F, A.rows(), A.cols() + 1);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, A.cols()) = b[r];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // inconsistent
  std::vector<FieldElem> x(A.cols(), F->zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, A.cols());
  return x;
}

std::vector<std::vector<FieldElem>> kernel_basis(const Matrix& A) {
  const auto& F = A.field();
  Matrix R = A;
  auto pivots = R.rref();
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElem> v(A.cols(), F->zero());
    v[free] = F->one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = F->neg(R.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& A) {
  const auto& F = A.field();
  std::size_t n = A.rows();
  Matrix aug(F, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, n + r) = F->one();
  }
  auto pivots = aug.rref();
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(F, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

std::vector<FieldElem> mat_vec(const Matrix& A, const std::vector<FieldElem>& x) {
  const auto& F = A.field();
  std::vector<FieldElem> y(A.rows(), F->zero());
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c)
      y[r] = F->add(y[r], F->mul(A.at(r, c), x[c]));
  return y;
}

}  // namespace composites
