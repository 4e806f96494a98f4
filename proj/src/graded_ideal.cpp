#include "assoform/graded_ideal.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "assoform/errors.hpp"

namespace assoform {

struct GradedIdeal::Cache {
  std::mutex mutex;
  std::map<unsigned, std::shared_ptr<const RrefResult>> pieces;
};

namespace {

void validate_generators(std::size_t nvars, unsigned degree, const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw InvalidArgument("generator has the wrong number of variables");
    if (g.space() != Space::Primal) throw InvalidArgument("ideal generators must be primal polynomials");
    if (!g.is_homogeneous_of_degree(degree)) {
      throw InvalidArgument("generator is not homogeneous of degree " + std::to_string(degree));
    }
  }
}

}  // namespace

GradedIdeal::GradedIdeal(std::size_t nvars, unsigned generator_degree, std::vector<Polynomial> generators,
                         unsigned degree_cap)
    : nvars_(nvars),
      degree_(generator_degree),
      generators_(std::move(generators)),
      degree_cap_(degree_cap),
      cache_(std::make_shared<Cache>()) {
  if (nvars_ == 0) throw InvalidArgument("ideal in zero variables");
  validate_generators(nvars_, degree_, generators_);
  if (degree_ > 0 && socle_degree() > degree_cap_) {
    throw DegreeCapExceeded("n(d-1) = " + std::to_string(socle_degree()) + " exceeds the degree cap " +
                            std::to_string(degree_cap_));
  }
}

namespace {

const Polynomial& first_generator(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw InvalidArgument("cannot infer the ring from an empty generator list");
  return gens.front();
}

}  // namespace

GradedIdeal::GradedIdeal(std::vector<Polynomial> generators, unsigned degree_cap)
    : GradedIdeal(first_generator(generators).nvars(), first_generator(generators).degree().value_or(0),
                  generators, degree_cap) {}

unsigned GradedIdeal::socle_degree() const {
  return degree_ == 0 ? 0 : static_cast<unsigned>(nvars_) * (degree_ - 1);
}

const RrefResult& GradedIdeal::piece(unsigned k) const {
  if (k > degree_cap_ + degree_ + 1) {
    throw DegreeCapExceeded("graded degree " + std::to_string(k) + " is beyond the degree cap");
  }
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->pieces.find(k);
    if (it != cache_->pieces.end()) return *it->second;
  }
  // Computed outside the lock; racing writers produce identical results.
  const auto basis = MonomialBasis::of(nvars_, k);
  QMatrix spanning(0, basis->size());
  if (k >= degree_) {
    const auto multipliers = MonomialBasis::of(nvars_, k - degree_);
    for (const auto& g : generators_) {
      if (g.is_zero()) continue;
      for (const auto& m : multipliers->monomials()) {
        QVector row(basis->size());
        for (const auto& [mono, c] : g.terms()) row[basis->index_of(mono * m)] = c;
        spanning.append_row(row);
      }
    }
  }
  RrefResult full = rref(spanning);
  QMatrix trimmed(0, basis->size());
  for (std::size_t i = 0; i < full.pivots.size(); ++i) trimmed.append_row(full.matrix.row(i));
  auto result = std::make_shared<const RrefResult>(RrefResult{std::move(trimmed), std::move(full.pivots)});
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->pieces.emplace(k, std::move(result));
  return *it->second;
}

std::size_t GradedIdeal::quotient_dim(unsigned k) const { return count_monomials(nvars_, k) - piece_dim(k); }

bool GradedIdeal::contains(const Polynomial& f) const {
  if (f.nvars() != nvars_) throw InvalidArgument("polynomial has the wrong number of variables");
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) {
    // Graded ideal: membership is decided component by component.
    std::map<unsigned, Polynomial> parts;
    for (const auto& [m, c] : f.terms()) {
      parts.try_emplace(m.degree(), nvars_, Space::Primal).first->second.add_term(m, c);
    }
    for (const auto& [deg, part] : parts)
      if (!contains(part)) return false;
    return true;
  }
  const unsigned k = *f.degree();
  QVector v = f.with_space(Space::Primal).coefficients_in(*MonomialBasis::of(nvars_, k));
  return reduce_against(piece(k), v);
}

bool GradedIdeal::contains(const Monomial& m) const { return contains(Polynomial::term(m, 1)); }

QMatrix graded_piece(const GradedIdeal& ideal, unsigned k) { return ideal.piece(k).matrix; }

HilbertData hilbert_function(const GradedIdeal& ideal, unsigned bound) {
  HilbertData out;
  for (unsigned k = 0; k <= bound; ++k) out.values.push_back(ideal.quotient_dim(k));
  return out;
}

namespace {

// Validates n forms of a common degree in n variables and returns d.
unsigned check_square_system(std::span<const Polynomial> gs) {
  if (gs.empty()) throw InvalidArgument("empty list of forms");
  const std::size_t n = gs.front().nvars();
  if (gs.size() != n) {
    throw InvalidArgument("expected " + std::to_string(n) + " forms in " + std::to_string(n) + " variables, got " +
                          std::to_string(gs.size()));
  }
  const auto d = gs.front().degree();
  if (!d || *d == 0) throw InvalidArgument("forms must be nonzero of positive degree");
  for (const auto& g : gs) {
    if (g.nvars() != n) throw InvalidArgument("forms in different numbers of variables");
    if (!g.is_homogeneous_of_degree(*d) || g.is_zero()) {
      throw InvalidArgument("forms must all be homogeneous of degree " + std::to_string(*d));
    }
  }
  return *d;
}

}  // namespace

bool is_regular_sequence(std::span<const Polynomial> gs, unsigned degree_cap) {
  const unsigned d = check_square_system(gs);
  GradedIdeal ideal(gs.size(), d, {gs.begin(), gs.end()}, degree_cap);
  return ideal.quotient_dim(ideal.socle_degree() + 1) == 0;
}

std::optional<Monomial> min_nonideal_monomial(const GradedIdeal& ideal, unsigned k,
                                              std::optional<MonomialRestriction> restrict) {
  if (restrict && (restrict->split < 1 || restrict->split > ideal.nvars())) {
    throw InvalidArgument("restriction split index out of range");
  }
  const auto basis = MonomialBasis::of(ideal.nvars(), k);
  const auto& piece = ideal.piece(k);
  // The basis is in descending order, so scan it backwards.
  for (std::size_t i = basis->size(); i-- > 0;) {
    const Monomial& m = (*basis)[i];
    if (restrict && m.tail_degree(restrict->split) < restrict->power) continue;
    QVector v(basis->size());
    v[i] = 1;
    if (!reduce_against(piece, v)) return m;
  }
  return std::nullopt;
}

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t m, std::size_t j) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == j) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

unsigned common_degree(std::span<const Polynomial> gs) {
  if (gs.empty()) throw InvalidArgument("Koszul complex of an empty list");
  const auto d = gs.front().degree();
  if (!d) throw InvalidArgument("Koszul complex of a zero form");
  for (const auto& g : gs) {
    if (g.nvars() != gs.front().nvars() || !g.is_homogeneous_of_degree(*d) || g.is_zero()) {
      throw InvalidArgument("Koszul complex requires nonzero forms of one degree in one ring");
    }
  }
  return *d;
}

// Basis of K_j in degree k: (subset, monomial) pairs.
struct KoszulBasis {
  std::vector<std::vector<std::size_t>> subsets;
  std::shared_ptr<const MonomialBasis> monomials;  // null when k < j*d

  [[nodiscard]] std::size_t size() const { return monomials ? subsets.size() * monomials->size() : 0; }
};

KoszulBasis koszul_basis(std::size_t nvars, std::size_t m, unsigned d, std::size_t j, unsigned k) {
  KoszulBasis out{subsets_of_size(m, j), nullptr};
  const unsigned shift = static_cast<unsigned>(j) * d;
  if (k >= shift) out.monomials = MonomialBasis::of(nvars, k - shift);
  return out;
}

}  // namespace

std::size_t koszul_dimension(std::span<const Polynomial> gs, std::size_t j, unsigned k) {
  const unsigned d = common_degree(gs);
  if (j > gs.size()) return 0;
  return koszul_basis(gs.front().nvars(), gs.size(), d, j, k).size();
}

QMatrix koszul_matrix(std::span<const Polynomial> gs, std::size_t j, unsigned k) {
  const unsigned d = common_degree(gs);
  const std::size_t m = gs.size();
  if (j < 1 || j > m) throw InvalidArgument("Koszul homological index out of range");
  const std::size_t n = gs.front().nvars();
  const KoszulBasis source = koszul_basis(n, m, d, j, k);
  const KoszulBasis target = koszul_basis(n, m, d, j - 1, k);
  QMatrix out(target.size(), source.size());
  if (source.size() == 0) return out;

  std::map<std::vector<std::size_t>, std::size_t> target_subset_index;
  for (std::size_t s = 0; s < target.subsets.size(); ++s) target_subset_index.emplace(target.subsets[s], s);

  const std::size_t source_block = source.monomials->size();
  const std::size_t target_block = target.monomials->size();
  for (std::size_t s = 0; s < source.subsets.size(); ++s) {
    const auto& subset = source.subsets[s];
    for (std::size_t mi = 0; mi < source_block; ++mi) {
      const Monomial& mono = (*source.monomials)[mi];
      const std::size_t col = s * source_block + mi;
      // d(e_{i_1} ^ ... ^ e_{i_j}) = sum_r (-1)^{r-1} g_{i_r} e_{...omit i_r...}
      for (std::size_t r = 0; r < subset.size(); ++r) {
        std::vector<std::size_t> face = subset;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(r));
        const std::size_t t = target_subset_index.at(face);
        const Rational sign = (r % 2 == 0) ? Rational(1) : Rational(-1);
        for (const auto& [gm, gc] : gs[subset[r]].terms()) {
          const std::size_t row = t * target_block + target.monomials->index_of(gm * mono);
          out(row, col) += sign * gc;
        }
      }
    }
  }
  return out;
}

bool koszul_exactness_check(std::span<const Polynomial> gs, unsigned k_max) {
  const std::size_t m = gs.size();
  common_degree(gs);
  for (unsigned k = 0; k <= k_max; ++k) {
    std::vector<std::size_t> ranks(m + 2, 0);  // ranks[j] = rank d_j, with d_{m+1} = 0
    for (std::size_t j = 1; j <= m; ++j) ranks[j] = rank(koszul_matrix(gs, j, k));
    for (std::size_t j = 1; j <= m; ++j) {
      if (ranks[j] + ranks[j + 1] != koszul_dimension(gs, j, k)) return false;
    }
  }
  return true;
}

}  // namespace assoform
