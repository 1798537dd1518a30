#pragma once

#include <optional>
#include <vector>

#include "composites/field.hpp"

namespace composites {

// Dense matrix over a runtime field. Row-major; desk-scale sizes only.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  FieldElem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const FieldElem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  // Reduced row echelon form in place; returns pivot column indices.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<FieldElem> a_;
};

// One solution of A x = b, if any.
std::optional<std::vector<FieldElem>> solve(const Matrix& A, const std::vector<FieldElem>& b);

// Basis of the null space of A, deterministic order (free columns ascending).
std::vector<std::vector<FieldElem>> kernel_basis(const Matrix& A);

// Inverse of a square matrix; nullopt if singular.
std::optional<Matrix> inverse(const Matrix& A);

std::vector<FieldElem> mat_vec(const Matrix& A, const std::vector<FieldElem>& x);

}  // namespace composites
