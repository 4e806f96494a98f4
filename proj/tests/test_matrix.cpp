#include <doctest.h>

#include <random>

#include "assoform/matrix.hpp"

using assoform::QMatrix;
using assoform::QVector;
using assoform::Rational;

namespace {

QMatrix m(std::vector<QVector> rows) { return QMatrix::from_rows(rows); }

QMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  QMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) out(i, j) = coeff(rng);
  }
  return out;
}

}  // namespace

TEST_CASE("rref examples") {
  auto r = assoform::rref(m({{2, 4}, {1, 2}}));
  CHECK(r.matrix == m({{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});

  r = assoform::rref(QMatrix::identity(3));
  CHECK(r.matrix == QMatrix::identity(3));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  r = assoform::rref(m({{0, 1}, {1, 0}}));
  CHECK(r.matrix == QMatrix::identity(2));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});

  r = assoform::rref(QMatrix(2, 3));
  CHECK(r.pivots.empty());
}

TEST_CASE("kernel examples") {
  auto k = assoform::kernel_basis(m({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK_FALSE(k[0][0].is_zero());
  CHECK(assoform::kernel_basis(QMatrix::identity(3)).empty());
  CHECK(assoform::kernel_basis(QMatrix(2, 3)).size() == 3);
}

TEST_CASE("rank examples") {
  CHECK(assoform::rank(QMatrix(3, 2)) == 0);
  CHECK(assoform::rank(QMatrix::identity(4)) == 4);
  CHECK(assoform::rank(m({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("determinant and inverse") {
  CHECK(assoform::determinant(m({{1, 2}, {3, 4}})) == -2);
  CHECK(assoform::determinant(m({{0, 1}, {1, 0}})) == -1);
  CHECK(assoform::determinant(m({{1, 2}, {2, 4}})) == 0);
  CHECK_FALSE(assoform::inverse(m({{1, 2}, {2, 4}})).has_value());
  auto inv = assoform::inverse(m({{2, 1}, {1, 1}}));
  REQUIRE(inv);
  CHECK(*inv == m({{1, -1}, {-1, 2}}));
}

TEST_CASE("solve and reduce_against") {
  auto x = assoform::solve(m({{1, 1}, {1, -1}}), QVector{Rational(3), Rational(1)});
  REQUIRE(x);
  CHECK(*x == QVector{Rational(2), Rational(1)});
  CHECK_FALSE(assoform::solve(m({{1, 1}, {1, 1}}), QVector{Rational(1), Rational(2)}).has_value());

  const auto basis = assoform::rref(m({{1, 0, 1}, {0, 1, 1}}));
  QVector inside{Rational(2), Rational(3), Rational(5)};
  CHECK(assoform::reduce_against(basis, inside));
  QVector outside{Rational(0), Rational(0), Rational(1)};
  CHECK_FALSE(assoform::reduce_against(basis, outside));
}

TEST_CASE("random matrices: rank-nullity, kernel, rref idempotence") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 5;
    const std::size_t c = 1 + rng() % 5;
    QMatrix a = random_matrix(r, c, rng);
    if (trial % 3 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * Rational(2);
    }
    const auto kernel = assoform::kernel_basis(a);
    CHECK(assoform::rank(a) + kernel.size() == c);
    for (const auto& v : kernel) {
      for (const auto& entry : a * v) CHECK(entry.is_zero());
    }
    const auto once = assoform::rref(a);
    CHECK(assoform::rref(once.matrix).matrix == once.matrix);
    CHECK(assoform::rank(a.transpose()) == assoform::rank(a));
  }
}

TEST_CASE("random square matrices: inverse and multiplicative determinant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const QMatrix a = random_matrix(n, n, rng);
    const QMatrix b = random_matrix(n, n, rng);
    CHECK(assoform::determinant(a * b) == assoform::determinant(a) * assoform::determinant(b));
    if (auto inv = assoform::inverse(a)) {
      CHECK(a * *inv == QMatrix::identity(n));
    } else {
      CHECK(assoform::determinant(a).is_zero());
    }
  }
}
