#include <doctest.h>

#include "assoform/errors.hpp"
#include "assoform/parser.hpp"
#include "assoform/polynomial.hpp"
#include "support/random_forms.hpp"

using namespace assoform;
using testing::dual;
using testing::primal;

namespace {

Monomial mono(std::vector<unsigned> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("grevlex comparison") {
  CHECK(grevlex_less(mono({1, 2}), mono({2, 1})));
  CHECK_FALSE(grevlex_less(mono({2, 1}), mono({1, 2})));
  CHECK(grevlex_less(mono({1, 1}), mono({3, 0})));
  CHECK_FALSE(grevlex_less(mono({1, 1}), mono({1, 1})));
  // x1 x3 < x2^2 in grevlex on three variables.
  CHECK(grevlex_less(mono({1, 0, 1}), mono({0, 2, 0})));
}

TEST_CASE("monomial bases are in descending grevlex order") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned k = 0; k <= 5; ++k) {
      const auto basis = MonomialBasis::of(n, k);
      CHECK(basis->size() == count_monomials(n, k));
      for (std::size_t i = 0; i + 1 < basis->size(); ++i) CHECK(grevlex_less((*basis)[i + 1], (*basis)[i]));
      for (std::size_t i = 0; i < basis->size(); ++i) CHECK(basis->index_of((*basis)[i]) == i);
    }
  }
  const auto b = MonomialBasis::of(3, 2);
  CHECK(b->monomials().front() == mono({2, 0, 0}));
  CHECK(b->monomials().back() == mono({0, 0, 2}));
  CHECK(count_monomials(3, 4) == 15);
}

TEST_CASE("apolar action examples") {
  CHECK(apolar_apply(primal("x1", 2), dual("z1^2", 2)) == dual("2*z1", 2));
  CHECK(apolar_apply(primal("x1*x2", 2), dual("z1*z2", 2)) == dual("1", 2));
  CHECK(apolar_apply(primal("x1^2", 2), dual("z2^3", 2)).is_zero());
  CHECK(apolar_apply(primal("x1^2 + 3*x2", 2), dual("z1^3 + z1*z2^2", 2)) ==
        dual("6*z1 + 6*z1*z2", 2));
  CHECK_THROWS_AS(apolar_apply(dual("z1", 2), dual("z1", 2)), InvalidArgument);
}

TEST_CASE("pairing examples") {
  CHECK(pairing(primal("x1^2", 2), dual("z1^2", 2)) == 2);
  CHECK(pairing(primal("x1*x2", 2), dual("z1^2", 2)) == 0);
  CHECK(pairing(primal("x1 + x2", 2), dual("z1", 2)) == 1);
}

TEST_CASE("partial derivatives") {
  CHECK(partial(primal("x1^3", 2), 0) == primal("3*x1^2", 2));
  CHECK(partial(primal("x1^3", 2), 1).is_zero());
  CHECK(partial(primal("x1*x2", 2), 0) == primal("x2", 2));
}

TEST_CASE("Jacobian determinant") {
  CHECK(jacobian_det(testing::primal_system({"x1^2", "x2^2"}, 2)) == primal("4*x1*x2", 2));
  for (unsigned d = 2; d <= 4; ++d) {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<Polynomial> gs;
      for (std::size_t i = 0; i < n; ++i) gs.push_back(Polynomial::term(Monomial::variable(n, i, d), 1));
      Monomial expected = Monomial::one(n);
      for (std::size_t i = 0; i < n; ++i) expected = expected * Monomial::variable(n, i, d - 1);
      CHECK(jacobian_det(gs) == Polynomial::term(expected, Rational(d).pow(static_cast<unsigned>(n))));
    }
  }
  CHECK(jacobian_det(testing::primal_system({"x1", "x1"}, 2)).is_zero());
}

TEST_CASE("substitution examples") {
  CHECK(substitute(primal("x1", 2), LinearMap::identity(2)) == primal("x1", 2));
  const LinearMap swap(QMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(substitute(primal("x1^2", 2), swap) == primal("x2^2", 2));
  // x1 -> x1 + x2: column 0 is the image (1, 1).
  const LinearMap shear(QMatrix::from_rows({{1, 0}, {1, 1}}));
  CHECK(substitute(primal("x1*x2", 2), shear) == primal("x1*x2 + x2^2", 2));
}

TEST_CASE("substitution composes with matrix multiplication") {
  testing::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const Polynomial f = testing::random_form(n, 3, rng);
    const LinearMap a = testing::random_invertible(n, rng);
    const LinearMap b = testing::random_invertible(n, rng);
    CHECK(substitute(f, compose(a, b)) == substitute(substitute(f, b), a));
    CHECK(substitute(substitute(f, a), a.inverse()) == f);
  }
}

TEST_CASE("pairing is invariant under the contragredient action") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const Polynomial g = testing::random_form(n, 3, rng);
    const Polynomial f = testing::random_form(n, 3, rng).with_space(Space::Dual);
    const LinearMap m = testing::random_invertible(n, rng);
    CHECK(pairing(substitute(g, m), substitute(f, m.inverse_transpose())) == pairing(g, f));
  }
}

TEST_CASE("arithmetic and ring laws") {
  testing::Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial a = testing::random_form(3, 2, rng);
    const Polynomial b = testing::random_form(3, 1, rng);
    const Polynomial c = testing::random_form(3, 2, rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a.pow(2) == a * a);
  }
  CHECK_THROWS_AS(primal("x1", 2) + primal("x1", 3), InvalidArgument);
  CHECK_THROWS_AS(primal("x1", 2) + dual("z1", 2), InvalidArgument);
}

TEST_CASE("degree and homogeneity") {
  CHECK(primal("x1^2 + x2", 2).degree() == 2u);
  CHECK_FALSE(primal("x1^2 + x2", 2).is_homogeneous());
  CHECK(primal("x1^2 - x1*x2", 2).is_homogeneous_of_degree(2));
  CHECK_FALSE(Polynomial(2).degree().has_value());
  CHECK(primal("x2*x3", 3).uses_only_variables(1, 3));
  CHECK_FALSE(primal("x1*x3", 3).uses_only_variables(1, 3));
}

TEST_CASE("rendering") {
  CHECK(to_string(primal("x1^2 - 3*x1*x2 + (1/2)*x2^2", 2)) == "x1^2 - 3*x1*x2 + (1/2)*x2^2");
  CHECK(to_string(primal("-x2 + 1", 2)) == "-x2 + 1");
  CHECK(to_string(Polynomial(2)) == "0");
  CHECK(to_string(primal("-(1/3)*x1", 2)) == "-(1/3)*x1");
  CHECK(to_string(dual("z1*z2", 2)) == "z1*z2");
  const std::vector<std::string> names = {"u", "v"};
  CHECK(to_string(primal("x1^3*x2", 2), names) == "u^3*v");
  CHECK(to_string(dual("z1", 2), names) == "z1");
}

TEST_CASE("printing then parsing is the identity") {
  testing::Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 3;
    Polynomial f = testing::random_form(n, 1 + trial % 4, rng, 0.5);
    f += testing::random_form(n, trial % 3, rng, 0.5) * Rational(1, 1 + trial % 5);
    CHECK(primal(to_string(f), n) == f);
    const Polynomial g = f.with_space(Space::Dual);
    CHECK(dual(to_string(g), n) == g);
  }
}

TEST_CASE("block helpers") {
  const Polynomial f = primal("x2^2 + x2*x3", 3);
  const Polynomial r = restrict_to_block(f, 1, 2);
  CHECK(r == primal("x1^2 + x1*x2", 2));
  CHECK(embed_block(r, 3, 1) == f);
  CHECK_THROWS_AS(restrict_to_block(primal("x1*x2", 3), 1, 2), InvalidArgument);
  CHECK(truncate_variables(primal("x1^2 + x1*x2 + x3^2", 3), 1) == primal("x1^2", 3));
  CHECK(make_monic(primal("2*x1 + 4*x2", 2)) == primal("x1 + 2*x2", 2));
}

TEST_CASE("linear maps") {
  const LinearMap m(QMatrix::from_rows({{2, 1}, {1, 1}}));
  CHECK(m.det() == 1);
  CHECK(compose(m, m.inverse()) == LinearMap::identity(2));
  CHECK(m.inverse_transpose().matrix() == m.inverse().matrix().transpose());
  CHECK_THROWS_AS((void)LinearMap(QMatrix::from_rows({{1, 2}, {2, 4}})).inverse(), InvalidArgument);
  CHECK_THROWS_AS(LinearMap(QMatrix(2, 3)), InvalidArgument);
}

TEST_CASE("grevlex is a strict total order on monomials of fixed size") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Monomial> all;
    for (unsigned k = 0; k <= 5; ++k) {
      for (const auto& m : MonomialBasis::of(n, k)->monomials()) all.push_back(m);
    }
    for (const auto& a : all) {
      CHECK_FALSE(grevlex_less(a, a));
      for (const auto& b : all) {
        if (a == b) continue;
        CHECK(grevlex_less(a, b) != grevlex_less(b, a));
        if (!grevlex_less(a, b)) continue;
        for (const auto& c : all) {
          if (grevlex_less(b, c)) CHECK(grevlex_less(a, c));
        }
      }
    }
  }
}

TEST_CASE("the apolarity pairing is diagonal with entries a!") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned k = 0; k <= 4; ++k) {
      const auto basis = MonomialBasis::of(n, k);
      for (const auto& a : basis->monomials()) {
        for (const auto& b : basis->monomials()) {
          Rational expected = 0;
          if (a == b) {
            expected = 1;
            for (auto e : a.exponents()) expected *= factorial(e);
          }
          CHECK(pairing(Polynomial::term(a, 1), Polynomial::term(b, 1, Space::Dual)) == expected);
        }
      }
    }
  }
}
