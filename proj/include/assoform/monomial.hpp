#ifndef ASSOFORM_MONOMIAL_HPP
#define ASSOFORM_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

namespace assoform {

// Exponent vector x_1^{e_1} ... x_n^{e_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  [[nodiscard]] std::size_t nvars() const { return exponents_.size(); }
  [[nodiscard]] unsigned degree() const;
  [[nodiscard]] std::span<const unsigned> exponents() const { return exponents_; }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }

  [[nodiscard]] bool divides(const Monomial& other) const;
  // Sum of exponents over variables [first, nvars).
  [[nodiscard]] unsigned tail_degree(std::size_t first) const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  // Requires rhs to divide lhs.
  friend Monomial operator/(const Monomial& lhs, const Monomial& rhs);

  // Lexicographic on exponent vectors; not a monomial order, only for keys.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exponents_;
};

// True iff a <_grevlex b: lower total degree first; for equal degree, the last
// nonzero entry of a - b is positive.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

// The monomials of one degree, in descending grevlex order, with reverse
// lookup. Instances are shared and immutable.
class MonomialBasis {
 public:
  static std::shared_ptr<const MonomialBasis> of(std::size_t nvars, unsigned degree);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] unsigned degree() const { return degree_; }
  [[nodiscard]] std::size_t size() const { return monomials_.size(); }
  [[nodiscard]] const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  [[nodiscard]] std::size_t index_of(const Monomial& m) const;

  MonomialBasis(std::size_t nvars, unsigned degree);

 private:
  std::size_t nvars_;
  unsigned degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

// Number of monomials of degree k in n variables.
std::size_t count_monomials(std::size_t nvars, unsigned degree);

}  // namespace assoform

#endif  // ASSOFORM_MONOMIAL_HPP
