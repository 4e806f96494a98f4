#include "assoform/polynomial.hpp"

#include <sstream>
#include <utility>

#include "assoform/errors.hpp"

namespace assoform {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c, Space space) {
  Polynomial out(nvars, space);
  out.add_term(Monomial::one(nvars), c);
  return out;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, Space space) {
  Polynomial out(nvars, space);
  out.add_term(Monomial::variable(nvars, index), 1);
  return out;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c, Space space) {
  Polynomial out(m.nvars(), space);
  out.add_term(m, c);
  return out;
}

Polynomial Polynomial::from_coefficients(const MonomialBasis& basis, std::span<const Rational> coefficients,
                                         Space space) {
  if (coefficients.size() != basis.size()) throw InvalidArgument("coefficient vector does not match basis");
  Polynomial out(basis.nvars(), space);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!coefficients[i].is_zero()) out.terms_.emplace(basis[i], coefficients[i]);
  }
  return out;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<unsigned> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  // Descending grevlex begins with a term of maximal degree.
  return terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return is_homogeneous_of_degree(*degree());
}

bool Polynomial::is_homogeneous_of_degree(unsigned d) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

bool Polynomial::uses_only_variables(std::size_t first, std::size_t last) const {
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if ((i < first || i >= last) && m[i] != 0) return false;
    }
  }
  return true;
}

QVector Polynomial::coefficients_in(const MonomialBasis& basis) const {
  if (basis.nvars() != nvars_) throw InvalidArgument("basis has a different number of variables");
  QVector out(basis.size());
  for (const auto& [m, c] : terms_) {
    if (m.degree() != basis.degree()) throw InvalidArgument("polynomial has a term outside the requested degree");
    out[basis.index_of(m)] = c;
  }
  return out;
}

Polynomial Polynomial::with_space(Space space) const {
  Polynomial out = *this;
  out.space_ = space;
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw InvalidArgument("term has the wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial out = constant(nvars_, 1, space_);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) out = out * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return out;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw InvalidArgument("polynomials in different numbers of variables");
  if (space_ != other.space_) throw InvalidArgument("polynomials in different variable spaces");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.check_compatible(rhs);
  Polynomial out(lhs.nvars_, lhs.space_);
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  return lhs.nvars_ == rhs.nvars_ && lhs.space_ == rhs.space_ && lhs.terms_ == rhs.terms_;
}

std::vector<std::string> default_variable_names(std::size_t nvars, Space space) {
  std::vector<std::string> out;
  const char prefix = space == Space::Primal ? 'x' : 'z';
  for (std::size_t i = 0; i < nvars; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

std::string to_string(const Polynomial& f) {
  return to_string(f, default_variable_names(f.nvars(), f.space()));
}

std::string to_string(const Polynomial& f, std::span<const std::string> names) {
  if (f.space() == Space::Dual) {
    const auto dual = default_variable_names(f.nvars(), Space::Dual);
    if (names.size() != dual.size() || !std::equal(names.begin(), names.end(), dual.begin())) {
      return to_string(f, dual);
    }
  }
  if (names.size() != f.nvars()) throw InvalidArgument("wrong number of variable names");
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = c.abs();
    const bool is_constant = m.degree() == 0;
    std::string coeff;
    if (magnitude.is_integer()) {
      if (is_constant || magnitude != Rational(1)) coeff = magnitude.str();
    } else {
      coeff = "(" + magnitude.str() + ")";
    }
    os << coeff;
    bool need_star = !coeff.empty();
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << '*';
      os << names[i];
      if (m[i] > 1) os << '^' << m[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial partial(const Polynomial& f, std::size_t index) {
  if (index >= f.nvars()) throw InvalidArgument("partial derivative index out of range");
  Polynomial out(f.nvars(), f.space());
  for (const auto& [m, c] : f.terms()) {
    if (m[index] == 0) continue;
    out.add_term(m / Monomial::variable(f.nvars(), index), c * Rational(m[index]));
  }
  return out;
}

Polynomial apolar_apply(const Polynomial& g, const Polynomial& f) {
  if (g.nvars() != f.nvars()) throw InvalidArgument("apolarity: mismatched numbers of variables");
  if (g.space() != Space::Primal || f.space() != Space::Dual) {
    throw InvalidArgument("apolarity: expected a primal operator acting on a dual form");
  }
  Polynomial out(f.nvars(), Space::Dual);
  for (const auto& [mg, cg] : g.terms()) {
    for (const auto& [mf, cf] : f.terms()) {
      if (!mg.divides(mf)) continue;
      // d^a/dz^a z^b = b!/(b-a)! z^{b-a}
      Rational falling = 1;
      for (std::size_t i = 0; i < mf.nvars(); ++i) {
        for (unsigned k = 0; k < mg[i]; ++k) falling *= Rational(mf[i] - k);
      }
      out.add_term(mf / mg, cg * cf * falling);
    }
  }
  return out;
}

Rational pairing(const Polynomial& g, const Polynomial& f) {
  if (!g.is_homogeneous() || !f.is_homogeneous()) throw InvalidArgument("pairing requires homogeneous forms");
  if (!g.is_zero() && !f.is_zero() && g.degree() != f.degree()) {
    throw InvalidArgument("pairing requires forms of equal degree");
  }
  const Polynomial scalar = apolar_apply(g, f);
  return scalar.coefficient(Monomial::one(f.nvars()));
}

namespace {

Polynomial determinant_expansion(const std::vector<std::vector<Polynomial>>& m, std::vector<std::size_t>& cols,
                                 std::size_t row, std::size_t nvars, Space space) {
  if (row == m.size()) return Polynomial::constant(nvars, 1, space);
  Polynomial out(nvars, space);
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t col = cols[k];
    if (!m[row][col].is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      Polynomial minor = determinant_expansion(m, cols, row + 1, nvars, space);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
      Polynomial contribution = m[row][col] * minor;
      if (sign > 0) {
        out += contribution;
      } else {
        out -= contribution;
      }
    }
    sign = -sign;
  }
  return out;
}

}  // namespace

Polynomial jacobian_det(std::span<const Polynomial> gs) {
  if (gs.empty()) throw InvalidArgument("jacobian of an empty list");
  const std::size_t n = gs.front().nvars();
  if (gs.size() != n) throw InvalidArgument("jacobian requires exactly nvars polynomials");
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : gs) {
    if (g.nvars() != n || g.space() != gs.front().space()) {
      throw InvalidArgument("jacobian: polynomials in different rings");
    }
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(partial(g, j));
    jac.push_back(std::move(row));
  }
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  return determinant_expansion(jac, cols, 0, n, gs.front().space());
}

LinearMap::LinearMap(QMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw InvalidArgument("linear map must be square");
}

LinearMap LinearMap::inverse() const {
  auto inv = assoform::inverse(matrix_);
  if (!inv) throw InvalidArgument("linear map is singular");
  return LinearMap(std::move(*inv));
}

LinearMap LinearMap::inverse_transpose() const { return LinearMap(inverse().matrix().transpose()); }

LinearMap compose(const LinearMap& a, const LinearMap& b) {
  if (a.size() != b.size()) throw InvalidArgument("composing linear maps of different sizes");
  return LinearMap(a.matrix() * b.matrix());
}

Polynomial substitute(const Polynomial& f, const LinearMap& m) {
  const std::size_t n = f.nvars();
  if (m.size() != n) throw InvalidArgument("substitution matrix has the wrong size");
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial image(n, f.space());
    for (std::size_t i = 0; i < n; ++i) {
      if (!m.matrix()(i, j).is_zero()) image.add_term(Monomial::variable(n, i), m.matrix()(i, j));
    }
    images.push_back(std::move(image));
  }
  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](std::size_t j, unsigned e) -> const Polynomial& {
    auto& list = powers[j];
    if (list.empty()) list.push_back(Polynomial::constant(n, 1, f.space()));
    while (list.size() <= e) list.push_back(list.back() * images[j]);
    return list[e];
  };
  Polynomial out(n, f.space());
  for (const auto& [mono, c] : f.terms()) {
    Polynomial term = Polynomial::constant(n, c, f.space());
    for (std::size_t j = 0; j < n; ++j) {
      if (mono[j] > 0) term = term * power_of(j, mono[j]);
    }
    out += term;
  }
  return out;
}

Polynomial truncate_variables(const Polynomial& f, std::size_t first) {
  Polynomial out(f.nvars(), f.space());
  for (const auto& [m, c] : f.terms()) {
    if (m.tail_degree(first) == 0) out.add_term(m, c);
  }
  return out;
}

Polynomial restrict_to_block(const Polynomial& f, std::size_t offset, std::size_t count) {
  if (offset + count > f.nvars()) throw InvalidArgument("variable block out of range");
  if (!f.uses_only_variables(offset, offset + count)) {
    throw InvalidArgument("polynomial involves variables outside the block");
  }
  Polynomial out(count, f.space());
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e(m.exponents().begin() + static_cast<std::ptrdiff_t>(offset),
                            m.exponents().begin() + static_cast<std::ptrdiff_t>(offset + count));
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Polynomial embed_block(const Polynomial& f, std::size_t nvars, std::size_t offset) {
  if (offset + f.nvars() > nvars) throw InvalidArgument("variable block out of range");
  Polynomial out(nvars, f.space());
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e(nvars, 0);
    for (std::size_t i = 0; i < m.nvars(); ++i) e[offset + i] = m[i];
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f * f.terms().begin()->second.inverse();
}

}  // namespace assoform
