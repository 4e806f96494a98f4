#include "assoform/stability.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "assoform/errors.hpp"
#include "assoform/inverse_system.hpp"
#include "min_norm_point.hpp"
#include "univariate.hpp"

namespace assoform {

OnePS::OnePS(std::vector<long> weights) : weights_(std::move(weights)) {
  if (std::accumulate(weights_.begin(), weights_.end(), 0L) != 0) {
    throw InvalidArgument("one-parameter subgroup weights must sum to zero");
  }
  if (std::all_of(weights_.begin(), weights_.end(), [](long w) { return w == 0; })) {
    throw InvalidArgument("one-parameter subgroup weights must not all vanish");
  }
}

OnePS OnePS::negated() const {
  std::vector<long> out = weights_;
  for (auto& w : out) w = -w;
  return OnePS(std::move(out));
}

OnePS OnePS::sorted() const {
  std::vector<long> out = weights_;
  std::sort(out.begin(), out.end());
  return OnePS(std::move(out));
}

WeightRange support_weight_range(const Polynomial& f, const OnePS& u) {
  if (f.is_zero()) throw InvalidArgument("weights of the zero polynomial");
  if (u.size() != f.nvars()) throw InvalidArgument("weight vector has the wrong length");
  WeightRange out{0, 0};
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    long w = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i) w += u[i] * static_cast<long>(m[i]);
    if (first) {
      out = {w, w};
      first = false;
    } else {
      out.min = std::min(out.min, w);
      out.max = std::max(out.max, w);
    }
  }
  return out;
}

bool limit_exists(const Polynomial& f, const OnePS& u) { return support_weight_range(f, u).min >= 0; }

std::optional<OnePS> torus_destabilizer(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("destabilizer of the zero polynomial");
  if (!f.is_homogeneous()) throw InvalidArgument("destabilizer requires a homogeneous form");
  const std::size_t n = f.nvars();
  const long m = static_cast<long>(*f.degree());
  // Shifted exponent vectors n*a - m*(1,...,1); they lie in the sum-zero
  // hyperplane and the centroid moves to the origin.
  std::vector<QVector> points;
  for (const auto& [mono, c] : f.terms()) {
    QVector p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Rational(static_cast<long>(n) * static_cast<long>(mono[i]) - m);
    points.push_back(std::move(p));
  }
  const QVector nearest = detail::min_norm_point(points);
  if (std::all_of(nearest.begin(), nearest.end(), [](const Rational& r) { return r.is_zero(); })) {
    return std::nullopt;
  }
  const mpz_class scale = lcm_of_denominators(nearest.data(), nearest.data() + nearest.size());
  std::vector<mpz_class> ints;
  mpz_class common = 0;
  for (const auto& r : nearest) {
    mpz_class v = r.numerator() * (scale / r.denominator());
    mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  std::vector<long> weights;
  for (auto& v : ints) {
    v /= common;
    if (!v.fits_slong_p()) throw InternalError("destabilizing weight does not fit in a machine integer");
    weights.push_back(v.get_si());
  }
  return OnePS(std::move(weights));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable:
      return "Stable";
    case Verdict::PolystableNotStable:
      return "PolystableNotStable";
    case Verdict::SemistableNotPolystable:
      return "SemistableNotPolystable";
    case Verdict::Unstable:
      return "Unstable";
  }
  return "?";
}

StabilityReport binary_stability(const Polynomial& f) {
  if (f.nvars() != 2) throw InvalidArgument("binary stability requires exactly two variables");
  if (f.is_zero()) throw InvalidArgument("binary stability of the zero form");
  if (!f.is_homogeneous()) throw InvalidArgument("binary stability requires a homogeneous form");
  const unsigned m = *f.degree();
  StabilityReport report{Verdict::PolystableNotStable, m, {}, std::nullopt, std::nullopt};
  if (m == 0) return report;

  // Root [1:0] has multiplicity equal to the power of z2 dividing f; the
  // remaining roots are those of the dehomogenization f(t, 1).
  unsigned at_infinity = m;
  std::vector<Rational> dehomogenized(m + 1);
  for (const auto& [mono, c] : f.terms()) {
    at_infinity = std::min(at_infinity, mono[1]);
    dehomogenized[mono[0]] += c;
  }
  const auto factors = detail::squarefree_decomposition(detail::UPoly(std::move(dehomogenized)));

  std::vector<unsigned>& mult = report.multiplicities;
  if (at_infinity > 0) mult.push_back(at_infinity);
  for (const auto& [factor, k] : factors) {
    for (int i = 0; i < factor.degree(); ++i) mult.push_back(k);
  }
  std::sort(mult.begin(), mult.end(), std::greater<>());
  const unsigned top = mult.front();

  if (2 * top < m) {
    report.verdict = Verdict::Stable;
  } else if (2 * top > m) {
    report.verdict = Verdict::Unstable;
    // A root of multiplicity > m/2 is unique, hence rational. Move its linear
    // factor to z1, where (1, -1) drives every term to zero.
    QMatrix coords = QMatrix::identity(2);
    if (at_infinity == top) {
      coords(0, 0) = 0;
      coords(0, 1) = 1;
      coords(1, 0) = -1;
      coords(1, 1) = 0;
    } else {
      for (const auto& [factor, k] : factors) {
        if (k != top) continue;
        if (factor.degree() != 1) throw InternalError("dominant root is not rational");
        const detail::UPoly monic = factor.monic();
        coords(1, 0) = -monic.coefficients()[0];  // root t0 of t - t0
      }
    }
    report.witness = OnePS({1, -1});
    report.witness_coordinates = LinearMap(std::move(coords));
  } else if (mult.size() == 2) {
    report.verdict = Verdict::PolystableNotStable;
  } else {
    report.verdict = Verdict::SemistableNotPolystable;
  }
  return report;
}

namespace {

void check_split(const GradedIdeal& ideal, std::size_t split) {
  if (split < 1 || split + 1 > ideal.nvars()) {
    throw InvalidArgument("split index must satisfy 1 <= b <= n-1");
  }
}

// Combinations of the rows of `basis` whose coordinates vanish on the
// columns selected by `zero_columns`, as a canonical row basis.
QMatrix subspace_vanishing_on(const QMatrix& basis, const std::vector<std::size_t>& zero_columns) {
  QMatrix restricted(zero_columns.size(), basis.rows());
  for (std::size_t i = 0; i < zero_columns.size(); ++i)
    for (std::size_t r = 0; r < basis.rows(); ++r) restricted(i, r) = basis(r, zero_columns[i]);
  QMatrix combos = QMatrix::from_rows(kernel_basis(restricted), basis.rows());
  return row_space_basis(combos * basis);
}

}  // namespace

std::size_t tail_intersection_dim(const GradedIdeal& ideal, std::size_t split) {
  check_split(ideal, split);
  const unsigned d = ideal.generator_degree();
  const auto basis = MonomialBasis::of(ideal.nvars(), d);
  std::vector<std::size_t> head_only;
  for (std::size_t i = 0; i < basis->size(); ++i) {
    if ((*basis)[i].tail_degree(split) == 0) head_only.push_back(i);
  }
  return subspace_vanishing_on(ideal.piece(d).matrix, head_only).rows();
}

std::optional<DecompositionCertificate> recognize_decomposable(const GradedIdeal& ideal, std::size_t split) {
  check_split(ideal, split);
  const std::size_t n = ideal.nvars();
  const unsigned d = ideal.generator_degree();
  const std::size_t tail = n - split;

  const bool condition_a = tail_intersection_dim(ideal, split) == tail;
  if (!condition_a) return std::nullopt;

  const unsigned power = static_cast<unsigned>(tail) * (d - 1) + 1;
  bool condition_b = power >= d;
  if (condition_b) {
    for (const auto& m : MonomialBasis::of(n, power)->monomials()) {
      if (m.tail_degree(split) == power && !ideal.contains(m)) {
        condition_b = false;
        break;
      }
    }
  }
  if (!condition_b) return std::nullopt;

  const auto basis = MonomialBasis::of(n, d);
  std::vector<std::size_t> touches_head;
  for (std::size_t i = 0; i < basis->size(); ++i) {
    if ((*basis)[i].tail_degree(split) < d) touches_head.push_back(i);
  }
  const QMatrix extracted = subspace_vanishing_on(ideal.piece(d).matrix, touches_head);
  if (extracted.rows() != tail) {
    throw InternalError("conditions (A) and (B) hold but the tail subring meets I_d in dimension " +
                        std::to_string(extracted.rows()));
  }
  DecompositionCertificate cert{split, {}, condition_a, condition_b};
  for (std::size_t r = 0; r < extracted.rows(); ++r) {
    cert.generators.push_back(Polynomial::from_coefficients(*basis, extracted.row(r)));
  }
  return cert;
}

std::vector<Polynomial> degeneration_limit(std::span<const Polynomial> gs, std::size_t split, unsigned degree_cap) {
  const std::size_t n = gs.size();
  if (n == 0 || gs.front().nvars() != n) throw InvalidArgument("expected n forms in n variables");
  if (split < 1 || split + 1 > n) throw InvalidArgument("split index must satisfy 1 <= a <= n-1");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= split) {
      if (!gs[i].uses_only_variables(split, n)) {
        throw PreconditionViolated("generator " + std::to_string(i + 1) + " is not in k[x_" +
                                   std::to_string(split + 1) + ", ..., x_" + std::to_string(n) + "]");
      }
      out.push_back(gs[i]);
    } else {
      out.push_back(truncate_variables(gs[i], split));
    }
  }
  bool regular = false;
  try {
    regular = is_regular_sequence(out, degree_cap);
  } catch (const InvalidArgument&) {
    regular = false;  // a block collapsed to zero
  }
  if (!regular) throw PreconditionViolated("the degeneration limit is not a regular sequence");
  return out;
}

OnePS random_one_ps(std::size_t n, std::mt19937_64& rng) {
  if (n < 2) throw InvalidArgument("a one-parameter subgroup of SL(n) needs n >= 2");
  std::uniform_int_distribution<long> dist(-5, 5);
  for (;;) {
    std::vector<long> w(n);
    long sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      w[i] = dist(rng);
      sum += w[i];
    }
    w[n - 1] = -sum;
    if (w[n - 1] < -5 || w[n - 1] > 5) continue;
    if (std::all_of(w.begin(), w.end(), [](long x) { return x == 0; })) continue;
    std::sort(w.begin(), w.end());
    return OnePS(std::move(w));
  }
}

bool grevlex_partial_sums_hold(const Monomial& m, unsigned d, std::optional<std::size_t> up_to) {
  const std::size_t limit = up_to.value_or(m.nvars());
  unsigned partial = 0;
  for (std::size_t i = 0; i < limit && i < m.nvars(); ++i) {
    partial += m[i];
    if (partial > static_cast<unsigned>(i + 1) * (d - 1)) return false;
  }
  return true;
}

AuditReport semistability_audit(std::span<const Polynomial> gs, std::size_t trials, std::uint64_t seed,
                                unsigned degree_cap) {
  const AssociatedForm af = associated_form(gs, degree_cap);
  const std::size_t n = gs.size();
  AuditReport report;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  if (n >= 2) {
    for (std::size_t t = 0; t < trials; ++t) {
      OnePS w = random_one_ps(n, rng);
      const WeightRange range = support_weight_range(af.form, w.negated());
      if (range.min > 0) report.semistable_evidence = false;
      report.samples.push_back({std::move(w), range});
    }
  }
  report.torus_destabilizer = torus_destabilizer(af.form);

  GradedIdeal ideal(std::vector<Polynomial>(gs.begin(), gs.end()), degree_cap);
  report.grevlex_minimal = min_nonideal_monomial(ideal, ideal.socle_degree());
  report.grevlex_inequalities_hold =
      report.grevlex_minimal && grevlex_partial_sums_hold(*report.grevlex_minimal, ideal.generator_degree());

  for (std::size_t b = 1; b < n; ++b) {
    if (recognize_decomposable(ideal, b)) {
      report.decomposable_split = b;
      break;
    }
  }
  if (!report.decomposable_split) {
    report.any_limit_exists = std::any_of(report.samples.begin(), report.samples.end(),
                                          [](const AuditSample& s) { return s.dual.min >= 0; });
  }
  return report;
}

}  // namespace assoform
