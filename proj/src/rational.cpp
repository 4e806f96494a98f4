#include "assoform/rational.hpp"

#include <ostream>

#include "assoform/errors.hpp"

namespace assoform {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view part) {
    std::string s(part);
    if (s.empty()) throw InvalidArgument("empty integer in rational literal");
    mpz_class z;
    if (z.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) {
      throw InvalidArgument("malformed rational literal '" + s + "'");
    }
    return z;
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  Rational out;
  out.value_ = 1 / value_;
  return out;
}

Rational Rational::pow(unsigned exponent) const {
  Rational out;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  out.value_ = mpq_class(num, den);
  return out;
}

Rational Rational::abs() const {
  Rational out;
  out.value_ = ::abs(value_);
  return out;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InvalidArgument("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(out);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

mpz_class lcm_of_denominators(const Rational* first, const Rational* last) {
  mpz_class out = 1;
  for (; first != last; ++first) {
    mpz_class den = first->denominator();
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), den.get_mpz_t());
  }
  return out;
}

}  // namespace assoform
