#ifndef ASSOFORM_SRC_UNIVARIATE_HPP
#define ASSOFORM_SRC_UNIVARIATE_HPP

#include <utility>
#include <vector>

#include "assoform/rational.hpp"

namespace assoform::detail {

// Dense univariate polynomial over Q, coefficients from low to high degree,
// no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  // -1 for zero.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

  [[nodiscard]] UPoly derivative() const;
  [[nodiscard]] UPoly monic() const;

  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// (quotient, remainder)
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);

// Yun's algorithm: f = c * prod_i s_i^i with s_i squarefree and pairwise
// coprime. Returns the pairs (s_i, i) with deg s_i > 0.
std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& f);

}  // namespace assoform::detail

#endif  // ASSOFORM_SRC_UNIVARIATE_HPP
