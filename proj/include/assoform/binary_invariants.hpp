#ifndef ASSOFORM_BINARY_INVARIANTS_HPP
#define ASSOFORM_BINARY_INVARIANTS_HPP

#include <vector>

#include "assoform/graded_ideal.hpp"
#include "assoform/polynomial.hpp"

namespace assoform {

// r-th transvectant of two binary forms of degrees p and q:
//   (p-r)!(q-r)!/(p!q!) sum_i (-1)^i C(r,i) d^r f/dz1^{r-i}dz2^i * d^r g/dz1^i dz2^{r-i}
Polynomial transvectant(const Polynomial& f, const Polynomial& g, unsigned r);

// For f = a z1^4 + 4b z1^3 z2 + 6c z1^2 z2^2 + 4d z1 z2^3 + e z2^4:
//   I = ae - 4bd + 3c^2,  J = ace + 2bcd - ad^2 - b^2 e - c^3.
struct QuarticInvariants {
  Rational i;
  Rational j;
};

QuarticInvariants quartic_invariants(const Polynomial& f);

// (f, f)_4 = kTransvectantI * I and (f, (f, f)_2)_4 = kTransvectantJ * J.
extern const Rational kTransvectantI;
extern const Rational kTransvectantJ;

// Point of a weighted projective space, normalized so the first nonzero
// coordinate is 1. The all-zero point is kept as is.
class GITPoint {
 public:
  explicit GITPoint(std::vector<Rational> coordinates);

  [[nodiscard]] const std::vector<Rational>& coordinates() const { return coords_; }
  [[nodiscard]] bool is_zero() const;

 private:
  std::vector<Rational> coords_;
};

// [I(A(F))^3 : J(A(F))^2] for a smooth binary quartic F.
GITPoint mather_yau_point(const Polynomial& f, unsigned degree_cap = kDefaultDegreeCap);

// Projective equality; throws InvalidArgument when both points are zero or
// the arities differ.
bool points_equal(const GITPoint& p, const GITPoint& q);

}  // namespace assoform

#endif  // ASSOFORM_BINARY_INVARIANTS_HPP
