#ifndef ASSOFORM_POLYNOMIAL_HPP
#define ASSOFORM_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "assoform/matrix.hpp"
#include "assoform/monomial.hpp"
#include "assoform/rational.hpp"

namespace assoform {

// Primal polynomials live in S = k[x_1..x_n]; dual ones in D = k[z_1..z_n],
// on which S acts by differentiation.
enum class Space { Primal, Dual };

class Polynomial {
 public:
  // Iteration order is descending grevlex.
  using Terms = std::map<Monomial, Rational, GrevlexGreater>;

  explicit Polynomial(std::size_t nvars, Space space = Space::Primal) : nvars_(nvars), space_(space) {}

  static Polynomial constant(std::size_t nvars, const Rational& c, Space space = Space::Primal);
  static Polynomial variable(std::size_t nvars, std::size_t index, Space space = Space::Primal);
  static Polynomial term(const Monomial& m, const Rational& c, Space space = Space::Primal);
  static Polynomial from_coefficients(const MonomialBasis& basis, std::span<const Rational> coefficients,
                                      Space space = Space::Primal);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] Space space() const { return space_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const Monomial& m) const;

  // Highest total degree of a term; nullopt for the zero polynomial.
  [[nodiscard]] std::optional<unsigned> degree() const;
  // The zero polynomial counts as homogeneous of every degree.
  [[nodiscard]] bool is_homogeneous() const;
  [[nodiscard]] bool is_homogeneous_of_degree(unsigned d) const;
  // True when no term involves a variable outside [first, last).
  [[nodiscard]] bool uses_only_variables(std::size_t first, std::size_t last) const;

  // Coordinates in the given monomial basis; every term must belong to it.
  [[nodiscard]] QVector coefficients_in(const MonomialBasis& basis) const;

  [[nodiscard]] Polynomial with_space(Space space) const;

  void add_term(const Monomial& m, const Rational& c);

  [[nodiscard]] Polynomial pow(unsigned exponent) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(Polynomial value) { return value *= Rational(-1); }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_;
  Space space_;
  Terms terms_;
};

// Default variable names: x1..xn for primal, z1..zn for dual.
std::vector<std::string> default_variable_names(std::size_t nvars, Space space);

// Canonical rendering, e.g. "x1^2 - 3*x1*x2 + (1/2)*x2^2". Terms appear in
// descending grevlex order. Dual polynomials always render with z1..zn.
std::string to_string(const Polynomial& f);
std::string to_string(const Polynomial& f, std::span<const std::string> names);

Polynomial partial(const Polynomial& f, std::size_t index);

// g(d/dz_1, ..., d/dz_n) f for primal g and dual f.
Polynomial apolar_apply(const Polynomial& g, const Polynomial& f);

// Apolarity pairing S_k x D_k -> k for homogeneous forms of equal degree.
Rational pairing(const Polynomial& g, const Polynomial& f);

// det of the n x n matrix (d g_i / d x_j).
Polynomial jacobian_det(std::span<const Polynomial> gs);

// Linear change of variables. Column j holds the image of variable j:
// x_j -> sum_i m(i, j) x_i. With this convention
// substitute(f, compose(a, b)) == substitute(substitute(f, b), a).
class LinearMap {
 public:
  explicit LinearMap(QMatrix matrix);
  static LinearMap identity(std::size_t n) { return LinearMap(QMatrix::identity(n)); }

  [[nodiscard]] std::size_t size() const { return matrix_.rows(); }
  [[nodiscard]] const QMatrix& matrix() const { return matrix_; }
  [[nodiscard]] Rational det() const { return determinant(matrix_); }

  // Throws InvalidArgument when singular.
  [[nodiscard]] LinearMap inverse() const;
  // The matching action on dual variables: (m^{-1})^T.
  [[nodiscard]] LinearMap inverse_transpose() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  QMatrix matrix_;
};

LinearMap compose(const LinearMap& a, const LinearMap& b);

Polynomial substitute(const Polynomial& f, const LinearMap& m);

// Sets variables [first, nvars) to zero.
Polynomial truncate_variables(const Polynomial& f, std::size_t first);

// Views a polynomial in variables [offset, offset + count) as a polynomial in
// `count` variables; throws if other variables occur.
Polynomial restrict_to_block(const Polynomial& f, std::size_t offset, std::size_t count);
// Inverse of restrict_to_block.
Polynomial embed_block(const Polynomial& f, std::size_t nvars, std::size_t offset);

// Divides by the leading (descending grevlex) coefficient.
Polynomial make_monic(const Polynomial& f);

}  // namespace assoform

#endif  // ASSOFORM_POLYNOMIAL_HPP
