#include "assoform/matrix.hpp"

#include <utility>

#include "assoform/errors.hpp"

namespace assoform {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw InvalidArgument("matrix entry count does not match shape");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  QMatrix out(0, cols);
  for (const auto& r : rows) out.append_row(r);
  return out;
}

QVector QMatrix::row_vector(std::size_t r) const {
  auto span = row(r);
  return {span.begin(), span.end()};
}

QVector QMatrix::column_vector(std::size_t c) const {
  QVector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

void QMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw InvalidArgument("appended row has wrong length");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

void QMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

bool QMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

QMatrix operator*(const QMatrix& lhs, const QMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw InvalidArgument("matrix product shape mismatch");
  QMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

QVector operator*(const QMatrix& lhs, std::span<const Rational> rhs) {
  if (lhs.cols_ != rhs.size()) throw InvalidArgument("matrix-vector shape mismatch");
  QVector out(lhs.rows_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) out[i] = dot(lhs.row(i), rhs);
  return out;
}

RrefResult rref(const QMatrix& m) {
  RrefResult out{m, {}};
  QMatrix& a = out.matrix;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, col).is_zero()) ++r;
    if (r == a.rows()) continue;
    a.swap_rows(pivot_row, r);
    const Rational scale = a(pivot_row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= scale;
    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other == pivot_row || a(other, col).is_zero()) continue;
      const Rational factor = a(other, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(pivot_row, c).is_zero()) a(other, c) -= factor * a(pivot_row, c);
      }
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  return out;
}

QMatrix row_space_basis(const QMatrix& m) {
  RrefResult r = rref(m);
  QMatrix out(0, m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) out.append_row(r.matrix.row(i));
  return out;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<QVector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  QMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = col;
    while (r < n && a(r, col).is_zero()) ++r;
    if (r == n) return 0;
    if (r != col) {
      a.swap_rows(r, col);
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = a(col, col).inverse();
    for (std::size_t below = col + 1; below < n; ++below) {
      if (a(below, col).is_zero()) continue;
      const Rational factor = a(below, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(below, c) -= factor * a(col, c);
    }
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  const RrefResult r = rref(augmented);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) out(i, c) = r.matrix(i, n + c);
  return out;
}

std::optional<QVector> solve(const QMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw InvalidArgument("right-hand side has wrong length");
  QMatrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = rhs[r];
  }
  const RrefResult r = rref(augmented);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.matrix(i, m.cols());
  return x;
}

bool reduce_against(const RrefResult& basis, QVector& v) {
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
    const std::size_t p = basis.pivots[i];
    if (v[p].is_zero()) continue;
    const Rational factor = v[p];
    auto row = basis.matrix.row(i);
    for (std::size_t c = p; c < v.size(); ++c) {
      if (!row[c].is_zero()) v[c] -= factor * row[c];
    }
  }
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InvalidArgument("dot product length mismatch");
  Rational out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) out += a[i] * b[i];
  }
  return out;
}

}  // namespace assoform
