#include "assoform/monomial.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <utility>

#include "assoform/errors.hpp"

namespace assoform {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  std::vector<unsigned> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

unsigned Monomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0u); }

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw InvalidArgument("monomials in different numbers of variables");
  for (std::size_t i = 0; i < nvars(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

unsigned Monomial::tail_degree(std::size_t first) const {
  unsigned out = 0;
  for (std::size_t i = first; i < nvars(); ++i) out += exponents_[i];
  return out;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.nvars() != rhs.nvars()) throw InvalidArgument("monomials in different numbers of variables");
  std::vector<unsigned> e(lhs.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = lhs[i] + rhs[i];
  return Monomial(std::move(e));
}

Monomial operator/(const Monomial& lhs, const Monomial& rhs) {
  if (!rhs.divides(lhs)) throw InvalidArgument("monomial quotient is not a monomial");
  std::vector<unsigned> e(lhs.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = lhs[i] - rhs[i];
  return Monomial(std::move(e));
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw InvalidArgument("grevlex comparison of monomials in different numbers of variables");
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void enumerate(std::size_t nvars, unsigned remaining, std::vector<unsigned>& prefix, std::vector<Monomial>& out) {
  if (prefix.size() + 1 == nvars) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    prefix.push_back(e);
    enumerate(nvars, remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
  if (nvars == 0) {
    if (degree == 0) monomials_.emplace_back();
  } else {
    std::vector<unsigned> prefix;
    enumerate(nvars, degree, prefix, monomials_);
  }
  std::sort(monomials_.begin(), monomials_.end(), GrevlexGreater{});
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::shared_ptr<const MonomialBasis> MonomialBasis::of(std::size_t nvars, unsigned degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, unsigned>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(nvars, degree);
  return slot;
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw InvalidArgument("monomial not in basis");
  return it->second;
}

std::size_t count_monomials(std::size_t nvars, unsigned degree) {
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // C(degree + nvars - 1, nvars - 1)
  std::size_t out = 1;
  for (std::size_t i = 1; i < nvars; ++i) out = out * (degree + i) / i;
  return out;
}

}  // namespace assoform
