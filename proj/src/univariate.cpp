#include "univariate.hpp"

#include "assoform/errors.hpp"

namespace assoform::detail {

UPoly::UPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Rational(i));
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> out = coeffs_;
  const Rational inv = leading().inverse();
  for (auto& c : out) c *= inv;
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] * inv;
    if (factor.is_zero()) continue;
    quot[static_cast<std::size_t>(i - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  const UPoly df = f.derivative();
  const UPoly a0 = gcd(f, df);
  UPoly b = divmod(f, a0).first;
  UPoly c = divmod(df, a0).first;
  UPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    const UPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace assoform::detail
