#ifndef ASSOFORM_GRADED_IDEAL_HPP
#define ASSOFORM_GRADED_IDEAL_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "assoform/matrix.hpp"
#include "assoform/monomial.hpp"
#include "assoform/polynomial.hpp"

namespace assoform {

// Largest socle degree n(d-1) accepted by default.
inline constexpr unsigned kDefaultDegreeCap = 24;

// Ideal of S = k[x_1..x_n] generated by forms of one degree d. Graded pieces
// are computed on demand and memoized; copies share the memo.
class GradedIdeal {
 public:
  GradedIdeal(std::size_t nvars, unsigned generator_degree, std::vector<Polynomial> generators,
              unsigned degree_cap = kDefaultDegreeCap);

  // Infers nvars and d from the first generator.
  explicit GradedIdeal(std::vector<Polynomial> generators, unsigned degree_cap = kDefaultDegreeCap);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] unsigned generator_degree() const { return degree_; }
  [[nodiscard]] const std::vector<Polynomial>& generators() const { return generators_; }
  [[nodiscard]] unsigned degree_cap() const { return degree_cap_; }
  // n(d-1), the socle degree when the generators form a regular sequence.
  [[nodiscard]] unsigned socle_degree() const;

  // RREF basis of I_k (one row per basis vector) in the coordinates of
  // MonomialBasis::of(nvars, k).
  [[nodiscard]] const RrefResult& piece(unsigned k) const;
  [[nodiscard]] std::size_t piece_dim(unsigned k) const { return piece(k).pivots.size(); }
  [[nodiscard]] std::size_t quotient_dim(unsigned k) const;

  [[nodiscard]] bool contains(const Polynomial& f) const;
  [[nodiscard]] bool contains(const Monomial& m) const;

 private:
  struct Cache;

  std::size_t nvars_;
  unsigned degree_;
  std::vector<Polynomial> generators_;
  unsigned degree_cap_;
  std::shared_ptr<Cache> cache_;
};

// Canonical basis of I_k as a matrix of rows; empty (0 rows) below degree d.
QMatrix graded_piece(const GradedIdeal& ideal, unsigned k);

struct HilbertData {
  // values[k] = dim_k (S/I)_k for k = 0..bound.
  std::vector<std::size_t> values;
};

HilbertData hilbert_function(const GradedIdeal& ideal, unsigned bound);

// n forms of degree d in n variables form a regular sequence iff
// (S/I)_{n(d-1)+1} = 0.
bool is_regular_sequence(std::span<const Polynomial> gs, unsigned degree_cap = kDefaultDegreeCap);

// Restricts to monomials in (x_{split+1}, ..., x_n)^power, i.e. whose total
// degree in the last n - split variables is at least `power`. `split` is
// 1-based as in x_1..x_split.
struct MonomialRestriction {
  std::size_t split;
  unsigned power;
};

// Grevlex-smallest degree-k monomial outside I_k.
std::optional<Monomial> min_nonideal_monomial(const GradedIdeal& ideal, unsigned k,
                                              std::optional<MonomialRestriction> restrict = std::nullopt);

// Matrix of the Koszul differential d_j : K_j -> K_{j-1} in graded degree k.
// Columns index the basis {m * e_{i_1} ^ ... ^ e_{i_j}} of K_j, rows that of
// K_{j-1}; subsets are ordered lexicographically, monomials by descending
// grevlex within each subset.
QMatrix koszul_matrix(std::span<const Polynomial> gs, std::size_t j, unsigned k);

// dim of K_j in graded degree k.
std::size_t koszul_dimension(std::span<const Polynomial> gs, std::size_t j, unsigned k);

// Exactness of the Koszul complex at K_j for 1 <= j <= m in all degrees
// k <= k_max.
bool koszul_exactness_check(std::span<const Polynomial> gs, unsigned k_max);

}  // namespace assoform

#endif  // ASSOFORM_GRADED_IDEAL_HPP
