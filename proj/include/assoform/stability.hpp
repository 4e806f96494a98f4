#ifndef ASSOFORM_STABILITY_HPP
#define ASSOFORM_STABILITY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "assoform/graded_ideal.hpp"
#include "assoform/polynomial.hpp"

namespace assoform {

// Diagonal one-parameter subgroup t -> diag(t^{w_1}, ..., t^{w_n}) acting on
// the variables of the form it is applied to. Weights sum to zero and are
// not all zero.
class OnePS {
 public:
  explicit OnePS(std::vector<long> weights);

  [[nodiscard]] std::size_t size() const { return weights_.size(); }
  [[nodiscard]] const std::vector<long>& weights() const { return weights_; }
  long operator[](std::size_t i) const { return weights_[i]; }

  // The same subgroup seen on the dual variables.
  [[nodiscard]] OnePS negated() const;
  [[nodiscard]] OnePS sorted() const;

  friend bool operator==(const OnePS&, const OnePS&) = default;

 private:
  std::vector<long> weights_;
};

struct WeightRange {
  long min;
  long max;
};

// min and max of sum_i u_i a_i over the monomials z^a in the support of f.
WeightRange support_weight_range(const Polynomial& f, const OnePS& u);

// lim_{t -> 0} u(t) . f exists iff every support weight is >= 0.
bool limit_exists(const Polynomial& f, const OnePS& u);

// A primitive integer weight vector with every support weight of f strictly
// positive, or nullopt when the centroid (deg f / n, ..., deg f / n) lies in
// the convex hull of the exponent vectors. The vector returned points from
// the centroid to the nearest point of that hull, which makes it unique and
// equivariant under permutations of the variables.
std::optional<OnePS> torus_destabilizer(const Polynomial& f);

enum class Verdict { Stable, PolystableNotStable, SemistableNotPolystable, Unstable };

std::string_view to_string(Verdict v);

struct StabilityReport {
  Verdict verdict;
  unsigned degree;
  // Multiplicities of the distinct roots over the algebraic closure, sorted
  // in decreasing order.
  std::vector<unsigned> multiplicities;
  // For unstable forms: substitute(f, *witness_coordinates) has every support
  // weight strictly positive under *witness.
  std::optional<OnePS> witness;
  std::optional<LinearMap> witness_coordinates;
};

// SL(2) stability of a binary form, decided from root multiplicities.
StabilityReport binary_stability(const Polynomial& f);

struct DecompositionCertificate {
  std::size_t split;                   // b, 1-based
  std::vector<Polynomial> generators;  // basis of I_d intersected with k[x_{b+1}..x_n]
  bool condition_a;
  bool condition_b;
};

// Checks (A) dim(I_d intersected with (x_{b+1}..x_n)) = n - b and
// (B) (x_{b+1}..x_n)^{(n-b)(d-1)+1} is contained in I. On success returns the
// n - b extracted generators living in the last n - b variables.
std::optional<DecompositionCertificate> recognize_decomposable(const GradedIdeal& ideal, std::size_t split);

// dim(I_d intersected with (x_{b+1}, ..., x_n)).
std::size_t tail_intersection_dim(const GradedIdeal& ideal, std::size_t split);

// The limit under the 1-PS of weight -(n-a) on x_1..x_a and a on the rest:
// g_i(x_1..x_a, 0..0) for i <= a, the tail generators unchanged.
std::vector<Polynomial> degeneration_limit(std::span<const Polynomial> gs, std::size_t split,
                                           unsigned degree_cap = kDefaultDegreeCap);

// Uniform weights in [-5, 5] conditioned on summing to zero and not all
// zero, sorted ascending.
OnePS random_one_ps(std::size_t n, std::mt19937_64& rng);

struct AuditSample {
  OnePS weights;        // acting on x
  WeightRange dual;     // support weight range of A(U) under the negated weights
};

struct AuditReport {
  std::uint64_t seed = 0;
  std::vector<AuditSample> samples;
  // Every sample had a nonpositive minimum weight on A(U).
  bool semistable_evidence = true;
  std::optional<OnePS> torus_destabilizer;
  std::optional<Monomial> grevlex_minimal;
  bool grevlex_inequalities_hold = true;
  // First b for which a decomposition certificate exists, if any.
  std::optional<std::size_t> decomposable_split;
  // Only filled when no split decomposes: whether any sample admits a limit.
  std::optional<bool> any_limit_exists;
};

AuditReport semistability_audit(std::span<const Polynomial> gs, std::size_t trials, std::uint64_t seed,
                                unsigned degree_cap = kDefaultDegreeCap);

// d_1 + ... + d_i <= i(d-1) for i = 1..up_to (default: all variables).
bool grevlex_partial_sums_hold(const Monomial& m, unsigned d, std::optional<std::size_t> up_to = std::nullopt);

}  // namespace assoform

#endif  // ASSOFORM_STABILITY_HPP
