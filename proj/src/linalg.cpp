#include "freealg/linalg.hpp"

#include "freealg/error.hpp"

namespace freealg {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, FieldElem::zero(field)) {}

Vector Matrix::apply(std::span<const FieldElem> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::BadArgument, "matrix/vector size mismatch");
  Vector out(rows_, FieldElem::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

RowEchelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const FieldElem inv = m(row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const FieldElem factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), FieldElem::zero(m.field()));
    v[free] = FieldElem::one(m.field());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const FieldElem> rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::BadArgument, "right-hand side size mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const auto ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), FieldElem::zero(m.field()));
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.reduced(i, m.cols());
  return x;
}

}  // namespace freealg
