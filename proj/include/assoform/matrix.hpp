#ifndef ASSOFORM_MATRIX_HPP
#define ASSOFORM_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "assoform/rational.hpp"

namespace assoform {

using QVector = std::vector<Rational>;

// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static QMatrix identity(std::size_t n);
  // All rows must have equal length; `cols` is used when `rows` is empty.
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols = 0);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  [[nodiscard]] QVector row_vector(std::size_t r) const;
  [[nodiscard]] QVector column_vector(std::size_t c) const;

  void append_row(std::span<const Rational> values);
  void swap_rows(std::size_t a, std::size_t b);

  [[nodiscard]] QMatrix transpose() const;
  [[nodiscard]] bool is_zero() const;

  friend QMatrix operator*(const QMatrix& lhs, const QMatrix& rhs);
  friend QVector operator*(const QMatrix& lhs, std::span<const Rational> rhs);
  friend bool operator==(const QMatrix& lhs, const QMatrix& rhs) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  QMatrix matrix;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination; the pivot in each column is the first nonzero
// entry scanning downward, so output is deterministic.
RrefResult rref(const QMatrix& m);

// Nonzero rows of rref(m): the canonical basis of the row space.
QMatrix row_space_basis(const QMatrix& m);

// Basis of the right null space, one vector per free column in increasing
// column order.
std::vector<QVector> kernel_basis(const QMatrix& m);

std::size_t rank(const QMatrix& m);

Rational determinant(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);

// Some solution of m x = rhs, or nullopt when the system is inconsistent.
std::optional<QVector> solve(const QMatrix& m, std::span<const Rational> rhs);

// Subtracts multiples of the rows of an RREF basis so that every pivot
// coordinate of `v` becomes zero. Returns true when the residue is zero.
bool reduce_against(const RrefResult& basis, QVector& v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace assoform

#endif  // ASSOFORM_MATRIX_HPP
