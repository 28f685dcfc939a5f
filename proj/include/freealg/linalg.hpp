#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "freealg/field.hpp"

namespace freealg {

using Vector = std::vector<FieldElem>;

/// Dense matrix over an exact field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector apply(std::span<const FieldElem> v) const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldElem> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of row i
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column (that column set to 1).
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some solution of m v = rhs, or nullopt when inconsistent. Free
/// variables are set to zero.
std::optional<Vector> solve(const Matrix& m, std::span<const FieldElem> rhs);

}  // namespace freealg
