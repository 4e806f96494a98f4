#include "assoform/inverse_system.hpp"

#include <string>
#include <utility>

#include "assoform/errors.hpp"

namespace assoform {

Rational HilbertPointFunctional::at(const Monomial& m) const {
  auto it = values.find(m);
  return it == values.end() ? Rational(0) : it->second;
}

Rational HilbertPointFunctional::operator()(const Polynomial& f) const {
  if (f.nvars() != nvars) throw InvalidArgument("functional applied in the wrong ring");
  Rational out;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != degree) throw InvalidArgument("functional applied to a form of the wrong degree");
    out += c * at(m);
  }
  return out;
}

HilbertPointFunctional hilbert_point_functional(std::span<const Polynomial> gs, unsigned degree_cap) {
  if (!is_regular_sequence(gs, degree_cap)) {
    throw NotRegularSequence("the forms have a nontrivial common zero: (S/I) does not vanish in degree n(d-1)+1");
  }
  const std::size_t n = gs.size();
  GradedIdeal ideal(std::vector<Polynomial>(gs.begin(), gs.end()), degree_cap);
  const unsigned nu = ideal.socle_degree();
  const auto basis = MonomialBasis::of(n, nu);
  const RrefResult& piece = ideal.piece(nu);
  if (piece.pivots.size() + 1 != basis->size()) {
    throw InternalError("I_nu is not of codimension one for a regular sequence");
  }
  // The single free column c spans S_nu / I_nu. Reducing e_a against the
  // RREF basis leaves (e_a)_c at column c; that residue is a functional
  // vanishing on I_nu.
  std::vector<bool> is_pivot(basis->size(), false);
  for (auto p : piece.pivots) is_pivot[p] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  QVector residue(basis->size());
  residue[free_col] = 1;
  for (std::size_t i = 0; i < piece.pivots.size(); ++i) residue[piece.pivots[i]] = -piece.matrix(i, free_col);

  const Polynomial jac = jacobian_det(gs);
  const Rational jac_value = dot(residue, jac.coefficients_in(*basis));
  if (jac_value.is_zero()) throw InternalError("det Jac lies in I_nu");

  HilbertPointFunctional omega;
  omega.nvars = n;
  omega.degree = nu;
  const Rational scale = jac_value.inverse();
  for (std::size_t i = 0; i < basis->size(); ++i) {
    if (!residue[i].is_zero()) omega.values.emplace((*basis)[i], residue[i] * scale);
  }
  return omega;
}

AssociatedForm associated_form(std::span<const Polynomial> gs, unsigned degree_cap) {
  AssociatedForm out;
  out.omega = hilbert_point_functional(gs, degree_cap);
  out.source.assign(gs.begin(), gs.end());
  const unsigned nu = out.omega.degree;
  const Rational nu_factorial = factorial(nu);
  Polynomial form(out.omega.nvars, Space::Dual);
  for (const auto& [m, value] : out.omega.values) {
    Rational multinomial = nu_factorial;
    for (auto e : m.exponents()) multinomial /= factorial(e);
    form.add_term(m, multinomial * value);
  }
  if (form.is_zero()) throw InternalError("associated form vanished");
  out.form = std::move(form);
  return out;
}

Rational jacobian_pairing(const AssociatedForm& af) { return pairing(jacobian_det(af.source), af.form); }

QMatrix perp_piece(const Polynomial& f, unsigned k) {
  if (f.is_zero()) throw InvalidArgument("perp of the zero form");
  if (f.space() != Space::Dual) throw InvalidArgument("perp requires a dual form");
  if (!f.is_homogeneous()) throw InvalidArgument("perp requires a homogeneous form");
  const std::size_t n = f.nvars();
  const unsigned nu = *f.degree();
  const auto source = MonomialBasis::of(n, k);
  if (k > nu) return QMatrix::identity(source->size());
  const auto target = MonomialBasis::of(n, nu - k);
  // Row b, column a: coefficient of z^b in x^a o f, i.e. f_{a+b} (a+b)!/b!.
  QMatrix catalecticant(target->size(), source->size());
  for (std::size_t col = 0; col < source->size(); ++col) {
    const Monomial& a = (*source)[col];
    for (std::size_t row = 0; row < target->size(); ++row) {
      const Monomial& b = (*target)[row];
      const Monomial ab = a * b;
      const Rational c = f.coefficient(ab);
      if (c.is_zero()) continue;
      Rational falling = 1;
      for (std::size_t i = 0; i < n; ++i) {
        for (unsigned t = 0; t < a[i]; ++t) falling *= Rational(ab[i] - t);
      }
      catalecticant(row, col) = c * falling;
    }
  }
  return row_space_basis(QMatrix::from_rows(kernel_basis(catalecticant), source->size()));
}

std::vector<Polynomial> perp_generators(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("perp of the zero form");
  const std::size_t n = f.nvars();
  const unsigned nu = *f.degree();
  std::vector<Polynomial> out;
  QMatrix previous = perp_piece(f, 0);
  for (unsigned k = 1; k <= nu + 1; ++k) {
    const auto basis = MonomialBasis::of(n, k);
    const auto lower = MonomialBasis::of(n, k - 1);
    // Span of S_1 * (f^perp)_{k-1}, then add new basis vectors of (f^perp)_k.
    QMatrix generated(0, basis->size());
    for (std::size_t r = 0; r < previous.rows(); ++r) {
      const Polynomial g = Polynomial::from_coefficients(*lower, previous.row(r));
      for (std::size_t i = 0; i < n; ++i) {
        generated.append_row((g * Polynomial::variable(n, i)).coefficients_in(*basis));
      }
    }
    RrefResult span = rref(generated);
    const QMatrix current = perp_piece(f, k);
    for (std::size_t r = 0; r < current.rows(); ++r) {
      QVector v = current.row_vector(r);
      QVector probe = v;
      if (reduce_against(span, probe)) continue;
      out.push_back(Polynomial::from_coefficients(*basis, v));
      generated.append_row(v);
      span = rref(generated);
    }
    previous = current;
  }
  return out;
}

bool macaulay_roundtrip(std::span<const Polynomial> gs, unsigned degree_cap) {
  const AssociatedForm af = associated_form(gs, degree_cap);
  GradedIdeal ideal(std::vector<Polynomial>(gs.begin(), gs.end()), degree_cap);
  const unsigned nu = af.socle_degree();
  for (unsigned k = 0; k <= nu + 1; ++k) {
    if (perp_piece(af.form, k) != graded_piece(ideal, k)) return false;
  }
  return true;
}

std::vector<Polynomial> concat_blocks(std::span<const Polynomial> first, std::span<const Polynomial> second) {
  if (first.empty() || second.empty()) throw InvalidArgument("direct sum blocks must be nonempty");
  const std::size_t a = first.front().nvars();
  const std::size_t b = second.front().nvars();
  std::vector<Polynomial> out;
  for (const auto& g : first) {
    if (g.nvars() != a) throw InvalidArgument("first block mixes rings");
    out.push_back(embed_block(g, a + b, 0));
  }
  for (const auto& g : second) {
    if (g.nvars() != b) throw InvalidArgument("second block mixes rings");
    out.push_back(embed_block(g, a + b, a));
  }
  return out;
}

Polynomial direct_sum_assoc(std::span<const Polynomial> first, std::span<const Polynomial> second,
                            unsigned degree_cap) {
  if (first.empty() || second.empty()) throw InvalidArgument("direct sum blocks must be nonempty");
  const std::size_t a = first.front().nvars();
  const std::size_t n = a + second.front().nvars();
  const auto d = first.front().degree();
  if (!d || second.front().degree() != d) throw InvalidArgument("direct sum blocks must share one degree");
  const AssociatedForm left = associated_form(first, degree_cap);
  const AssociatedForm right = associated_form(second, degree_cap);
  const Rational scalar = binomial(static_cast<unsigned>(n) * (*d - 1), static_cast<unsigned>(a) * (*d - 1));
  return scalar * (embed_block(left.form, n, 0) * embed_block(right.form, n, a));
}

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(partial(f, i));
  return out;
}

AssociatedForm milnor_associated_form(const Polynomial& f, unsigned degree_cap) {
  if (f.space() != Space::Primal) throw InvalidArgument("expected a primal form");
  if (f.is_zero() || !f.is_homogeneous()) throw InvalidArgument("expected a nonzero homogeneous form");
  if (*f.degree() < 2) throw InvalidArgument("expected a form of degree at least 2");
  const auto grad = gradient(f);
  for (const auto& g : grad) {
    if (g.is_zero()) throw SingularHypersurface("a partial derivative vanishes identically");
  }
  if (!is_regular_sequence(grad, degree_cap)) {
    throw SingularHypersurface("the partial derivatives have a nontrivial common zero");
  }
  return associated_form(grad, degree_cap);
}

}  // namespace assoform
