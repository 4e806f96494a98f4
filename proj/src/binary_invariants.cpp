#include "assoform/binary_invariants.hpp"

#include <algorithm>

#include "assoform/errors.hpp"
#include "assoform/inverse_system.hpp"

namespace assoform {

namespace {

Polynomial mixed_partial(Polynomial f, unsigned first, unsigned second) {
  for (unsigned k = 0; k < first; ++k) f = partial(f, 0);
  for (unsigned k = 0; k < second; ++k) f = partial(f, 1);
  return f;
}

void require_binary_form(const Polynomial& f) {
  if (f.nvars() != 2) throw InvalidArgument("expected a binary form");
  if (!f.is_homogeneous()) throw InvalidArgument("expected a homogeneous binary form");
}

}  // namespace

Polynomial transvectant(const Polynomial& f, const Polynomial& g, unsigned r) {
  require_binary_form(f);
  require_binary_form(g);
  if (f.space() != g.space()) throw InvalidArgument("transvectant of forms in different spaces");
  const unsigned p = f.degree().value_or(0);
  const unsigned q = g.degree().value_or(0);
  if (r > p || r > q) throw InvalidArgument("transvectant order exceeds a degree");
  Polynomial sum(2, f.space());
  for (unsigned i = 0; i <= r; ++i) {
    Polynomial term = mixed_partial(f, r - i, i) * mixed_partial(g, i, r - i);
    term *= binomial(r, i);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum * (factorial(p - r) * factorial(q - r) / (factorial(p) * factorial(q)));
}

QuarticInvariants quartic_invariants(const Polynomial& f) {
  require_binary_form(f);
  if (f.degree() != 4u) throw InvalidArgument("quartic invariants require a form of degree 4");
  auto coeff = [&](unsigned e1) { return f.coefficient(Monomial({e1, 4 - e1})); };
  const Rational a = coeff(4);
  const Rational b = coeff(3) / 4;
  const Rational c = coeff(2) / 6;
  const Rational d = coeff(1) / 4;
  const Rational e = coeff(0);
  return {a * e - 4 * b * d + 3 * c * c, a * c * e + 2 * b * c * d - a * d * d - b * b * e - c * c * c};
}

const Rational kTransvectantI(2);
const Rational kTransvectantJ(6);

GITPoint::GITPoint(std::vector<Rational> coordinates) : coords_(std::move(coordinates)) {
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Rational& r) { return !r.is_zero(); });
  if (lead == coords_.end()) return;
  const Rational inv = lead->inverse();
  for (auto& c : coords_) c *= inv;
}

bool GITPoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

GITPoint mather_yau_point(const Polynomial& f, unsigned degree_cap) {
  if (f.nvars() != 2 || f.degree() != 4u || !f.is_homogeneous()) {
    throw InvalidArgument("the Mather-Yau point is implemented for binary quartics");
  }
  const AssociatedForm af = milnor_associated_form(f, degree_cap);
  const QuarticInvariants inv = quartic_invariants(af.form);
  return GITPoint({inv.i.pow(3), inv.j.pow(2)});
}

bool points_equal(const GITPoint& p, const GITPoint& q) {
  if (p.coordinates().size() != q.coordinates().size()) throw InvalidArgument("points of different arity");
  if (p.is_zero() && q.is_zero()) throw InvalidArgument("both points are zero: input is not semistable");
  return p.coordinates() == q.coordinates();
}

}  // namespace assoform
