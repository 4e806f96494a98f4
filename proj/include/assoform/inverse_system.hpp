#ifndef ASSOFORM_INVERSE_SYSTEM_HPP
#define ASSOFORM_INVERSE_SYSTEM_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "assoform/graded_ideal.hpp"
#include "assoform/polynomial.hpp"

namespace assoform {

// The linear functional omega on S_nu that vanishes on I_nu and takes the
// value 1 on det Jac(g_1, ..., g_n).
struct HilbertPointFunctional {
  std::size_t nvars = 0;
  unsigned degree = 0;
  std::map<Monomial, Rational, GrevlexGreater> values;  // zero values omitted

  [[nodiscard]] Rational at(const Monomial& m) const;
  Rational operator()(const Polynomial& f) const;
};

struct AssociatedForm {
  Polynomial form{0, Space::Dual};  // homogeneous of degree nu = n(d-1) in z
  std::vector<Polynomial> source;
  HilbertPointFunctional omega;

  [[nodiscard]] unsigned socle_degree() const { return omega.degree; }
};

HilbertPointFunctional hilbert_point_functional(std::span<const Polynomial> gs,
                                                unsigned degree_cap = kDefaultDegreeCap);

// omega((x_1 z_1 + ... + x_n z_n)^nu): the coefficient of z^a is
// (nu!/a!) omega(x^a).
AssociatedForm associated_form(std::span<const Polynomial> gs, unsigned degree_cap = kDefaultDegreeCap);

// Pairing of det Jac against the associated form; equals nu! whenever the
// omega normalization holds.
Rational jacobian_pairing(const AssociatedForm& af);

// Kernel of the catalecticant S_k -> D_{nu-k}, g -> g o f, as a canonical
// RREF row basis in MonomialBasis::of(n, k) coordinates. All of S_k for k > nu.
QMatrix perp_piece(const Polynomial& f, unsigned k);

// A minimal homogeneous generating set of f^perp, found degree by degree up
// to nu + 1.
std::vector<Polynomial> perp_generators(const Polynomial& f);

// perp_piece(A(gs), k) == graded_piece((gs), k) for k = 0..nu+1.
bool macaulay_roundtrip(std::span<const Polynomial> gs, unsigned degree_cap = kDefaultDegreeCap);

// Embeds two blocks living in their own rings (a and n-a variables) into
// x_1..x_n, first block on the leading variables.
std::vector<Polynomial> concat_blocks(std::span<const Polynomial> first, std::span<const Polynomial> second);

// binom(n(d-1), a(d-1)) A(first) A(second), computed from the blocks alone.
Polynomial direct_sum_assoc(std::span<const Polynomial> first, std::span<const Polynomial> second,
                            unsigned degree_cap = kDefaultDegreeCap);

std::vector<Polynomial> gradient(const Polynomial& f);

// A of the partial derivatives of F. Throws SingularHypersurface when they
// do not form a regular sequence.
AssociatedForm milnor_associated_form(const Polynomial& f, unsigned degree_cap = kDefaultDegreeCap);

}  // namespace assoform

#endif  // ASSOFORM_INVERSE_SYSTEM_HPP
