// Acceptance suite: one PASS/FAIL line per criterion, exact rational equality
// throughout. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "assoform/binary_invariants.hpp"
#include "assoform/errors.hpp"
#include "assoform/graded_ideal.hpp"
#include "assoform/inverse_system.hpp"
#include "assoform/stability.hpp"
#include "support/random_forms.hpp"

using namespace assoform;
namespace t = assoform::testing;

namespace {

struct Instance {
  std::size_t n;
  unsigned d;
  std::vector<Polynomial> gs;
};

// Failures are collected as short messages; a criterion passes when none occur.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += ok ? 0 : 1;
  }
  [[nodiscard]] bool ok() const { return failed_ == 0; }
  [[nodiscard]] std::string summary() const {
    std::ostringstream os;
    os << (total_ - failed_) << "/" << total_ << " checks";
    for (const auto& f : failures_) os << "; " << f;
    return os.str();
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

const std::vector<std::pair<std::size_t, unsigned>> kShapes = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};

std::vector<Instance> regular_instances() {
  t::Rng rng(20240101);
  std::vector<Instance> out;
  for (int i = 0; i < 100; ++i) {
    const auto [n, d] = kShapes[static_cast<std::size_t>(i) % kShapes.size()];
    out.push_back({n, d, t::random_regular_sequence(n, d, rng, i % 2 == 0 ? 1.0 : 0.5)});
  }
  return out;
}

std::vector<Polynomial> monomial_powers(const std::vector<unsigned>& degrees) {
  std::vector<Polynomial> gs;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    gs.push_back(Polynomial::term(Monomial::variable(degrees.size(), i, degrees[i]), 1));
  }
  return gs;
}

std::string describe(const Instance& inst) {
  std::string s = "(n,d)=(" + std::to_string(inst.n) + "," + std::to_string(inst.d) + ") [";
  for (std::size_t i = 0; i < inst.gs.size(); ++i) s += (i ? ", " : "") + to_string(inst.gs[i]);
  return s + "]";
}

// Oracle for the limit under weights -(n-a) on x_1..x_a and a on the rest:
// keep the terms of each generator of minimal weight.
std::vector<Polynomial> lowest_weight_parts(const std::vector<Polynomial>& gs, std::size_t a) {
  const std::size_t n = gs.front().nvars();
  std::vector<Polynomial> out;
  for (const auto& g : gs) {
    long best = 0;
    bool first = true;
    std::vector<std::pair<long, std::pair<Monomial, Rational>>> weighted;
    for (const auto& [m, c] : g.terms()) {
      long w = 0;
      for (std::size_t i = 0; i < n; ++i) {
        w += static_cast<long>(m[i]) * (i < a ? -static_cast<long>(n - a) : static_cast<long>(a));
      }
      weighted.push_back({w, {m, c}});
      if (first || w < best) best = w;
      first = false;
    }
    Polynomial part(n);
    for (const auto& [w, term] : weighted) {
      if (w == best) part.add_term(term.first, term.second);
    }
    out.push_back(part);
  }
  return out;
}

bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, std::size_t n, unsigned d) {
  const auto basis = MonomialBasis::of(n, d);
  std::vector<QVector> rows_a;
  std::vector<QVector> rows_b;
  for (const auto& p : a) rows_a.push_back(p.coefficients_in(*basis));
  for (const auto& p : b) rows_b.push_back(p.coefficients_in(*basis));
  return row_space_basis(QMatrix::from_rows(rows_a, basis->size())) ==
         row_space_basis(QMatrix::from_rows(rows_b, basis->size()));
}

// ----------------------------------------------------------------------------

void macaulay_round_trip(const std::vector<Instance>& instances, Check& check) {
  for (const auto& inst : instances) {
    const GradedIdeal ideal(inst.gs);
    const Polynomial f = associated_form(inst.gs).form;
    const unsigned nu = ideal.socle_degree();
    bool ok = true;
    for (unsigned k = 0; k <= nu + 1; ++k) ok = ok && perp_piece(f, k) == graded_piece(ideal, k);
    check.expect(ok, describe(inst));
  }
}

void hilbert_functions(const std::vector<Instance>& instances, Check& check) {
  for (const auto& inst : instances) {
    const GradedIdeal ideal(inst.gs);
    const unsigned nu = ideal.socle_degree();
    const auto h = hilbert_function(ideal, nu + 1).values;
    bool symmetric = true;
    for (unsigned k = 0; k <= nu; ++k) symmetric = symmetric && h[k] == h[nu - k];
    check.expect(h == t::complete_intersection_series(inst.n, inst.d, nu + 1) && symmetric, describe(inst));
  }
}

void product_formula(Check& check) {
  t::Rng rng(31337);
  const std::vector<std::pair<std::size_t, std::size_t>> blocks = {{1, 1}, {1, 2}, {2, 1}};
  for (int i = 0; i < 50; ++i) {
    const auto [a, b] = blocks[static_cast<std::size_t>(i) % blocks.size()];
    const unsigned d = 2 + static_cast<unsigned>(i / 3 % 2);
    const auto first = t::random_regular_sequence(a, d, rng);
    const auto second = t::random_regular_sequence(b, d, rng);
    const Polynomial product = direct_sum_assoc(first, second);
    const Polynomial whole = associated_form(concat_blocks(first, second)).form;
    // The same value rebuilt here from the two block forms and the binomial.
    const std::size_t n = a + b;
    const Polynomial fa = embed_block(associated_form(first).form, n, 0);
    const Polynomial fb = embed_block(associated_form(second).form, n, a);
    const Polynomial rebuilt =
        binomial(static_cast<unsigned>(n) * (d - 1), static_cast<unsigned>(a) * (d - 1)) * (fa * fb);
    check.expect(product == whole && rebuilt == whole, "block sizes " + std::to_string(a) + "+" + std::to_string(b));
  }
}

void monomial_example(Check& check) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned d = 2; d <= 4; ++d) {
      if (n == 3 && d == 4) continue;
      const unsigned nu = static_cast<unsigned>(n) * (d - 1);
      const Rational scalar =
          factorial(nu) / (factorial(d - 1).pow(static_cast<unsigned>(n)) * Rational(d).pow(static_cast<unsigned>(n)));
      const Polynomial expected =
          Polynomial::term(Monomial(std::vector<unsigned>(n, d - 1)), scalar, Space::Dual);
      check.expect(associated_form(monomial_powers(std::vector<unsigned>(n, d))).form == expected,
                   "A(x^" + std::to_string(d) + ") in " + std::to_string(n) + " variables");
    }
  }
  // Mixed exponents up to (4,4,4): the perp is generated by the pure powers, and
  // every graded piece is spanned by the monomials some x_i^{d_i} divides.
  for (unsigned d1 = 1; d1 <= 4; ++d1) {
    for (unsigned d2 = 1; d2 <= 4; ++d2) {
      for (unsigned d3 = 1; d3 <= 4; ++d3) {
        const std::vector<unsigned> ds = {d1, d2, d3};
        const Polynomial f = Polynomial::term(Monomial({d1 - 1, d2 - 1, d3 - 1}), 1, Space::Dual);
        const unsigned nu = d1 + d2 + d3 - 3;
        bool ok = true;
        for (unsigned k = 0; k <= nu + 1; ++k) {
          const auto basis = MonomialBasis::of(3, k);
          std::vector<QVector> rows;
          for (std::size_t i = 0; i < basis->size(); ++i) {
            const Monomial& m = (*basis)[i];
            if (m[0] >= d1 || m[1] >= d2 || m[2] >= d3) {
              QVector row(basis->size());
              row[i] = 1;
              rows.push_back(row);
            }
          }
          ok = ok && perp_piece(f, k) == QMatrix::from_rows(rows, basis->size());
        }
        auto gens = perp_generators(f);
        std::vector<Polynomial> expected;
        for (std::size_t i = 0; i < 3; ++i) expected.push_back(Polynomial::term(Monomial::variable(3, i, ds[i]), 1));
        bool gens_ok = gens.size() == 3;
        for (const auto& e : expected) gens_ok = gens_ok && std::find(gens.begin(), gens.end(), e) != gens.end();
        check.expect(ok && gens_ok, "perp of z^(" + std::to_string(d1 - 1) + "," + std::to_string(d2 - 1) + "," +
                                        std::to_string(d3 - 1) + ")");
      }
    }
  }
}

void semistability_evidence(const std::vector<Instance>& instances, Check& check) {
  std::uint64_t seed = 1;
  for (const auto& inst : instances) {
    const Polynomial f = associated_form(inst.gs).form;
    check.expect(!torus_destabilizer(f).has_value(), "torus destabilizer found for " + describe(inst));
    const AuditReport report = semistability_audit(inst.gs, 20, seed++);
    bool nonpositive = report.semistable_evidence;
    for (const auto& s : report.samples) nonpositive = nonpositive && s.dual.min <= 0;
    check.expect(nonpositive && report.samples.size() == 20, "audit sample destabilizes " + describe(inst));
  }
}

// Polystability of A(U) needs U polystable; gradients of smooth forms are, and
// arbitrary regular pairs are only guaranteed semistable.
void binary_exactness(const std::vector<Instance>& instances, Check& check) {
  t::Rng rng(4242);
  for (int i = 0; i < 100; ++i) {
    const unsigned d = 2 + static_cast<unsigned>(i % 3);
    const Instance inst{2, d, gradient(t::random_smooth_form(2, d + 1, rng))};
    const Verdict v = binary_stability(associated_form(inst.gs).form).verdict;
    check.expect(v != Verdict::Unstable && v != Verdict::SemistableNotPolystable,
                 std::string(to_string(v)) + " for " + describe(inst));
  }
  for (const auto& inst : instances) {
    if (inst.n != 2) continue;
    const Verdict v = binary_stability(associated_form(inst.gs).form).verdict;
    check.expect(v != Verdict::Unstable, "Unstable for " + describe(inst));
  }
  const Polynomial q = Polynomial::term(Monomial({2, 0}), 1, Space::Dual) + Polynomial::term(Monomial({0, 2}), 1, Space::Dual);
  for (unsigned d = 2; d <= 4; ++d) {
    check.expect(binary_stability(q.pow(d - 1)).verdict == Verdict::PolystableNotStable,
                 "(z1^2+z2^2)^" + std::to_string(d - 1));
  }
}

void grevlex_lemma(Check& check) {
  t::Rng rng(777);
  std::size_t vacuous = 0;
  for (int i = 0; i < 100; ++i) {
    const auto [n, d] = kShapes[static_cast<std::size_t>(i) % kShapes.size()];
    auto gs = t::random_regular_sequence(n, d, rng, 0.3);
    // Every other ideal gets an extra sparse generator.
    if (i % 2 == 1) {
      Polynomial extra = t::random_form(n, d, rng, 0.3);
      if (!extra.is_zero()) gs.push_back(extra);
    }
    const GradedIdeal ideal(n, d, gs);
    const unsigned nu = static_cast<unsigned>(n) * (d - 1);
    const auto m = min_nonideal_monomial(ideal, nu);
    if (!m) {
      ++vacuous;
      continue;
    }
    check.expect(grevlex_partial_sums_hold(*m, d), "ideal #" + std::to_string(i));
  }
  check.expect(vacuous < 100, "every ideal was vacuous");
}

void recognition_certificate(Check& check) {
  t::Rng rng(9090);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const unsigned d = 2 + static_cast<unsigned>(i / 2 % 2);
    const std::size_t b = 1 + static_cast<std::size_t>(i % static_cast<int>(n - 1));
    const auto head = t::random_regular_sequence(b, d, rng);
    const auto tail = t::random_regular_sequence(n - b, d, rng);
    const auto split = concat_blocks(head, tail);
    const auto mixed = t::mix(split, t::random_invertible_matrix(n, rng));
    const GradedIdeal ideal(mixed);
    const auto cert = recognize_decomposable(ideal, b);
    std::vector<Polynomial> embedded_tail;
    for (const auto& g : tail) embedded_tail.push_back(embed_block(g, n, b));
    bool ok = cert.has_value() && cert->condition_a && cert->condition_b && cert->generators.size() == n - b;
    if (ok) {
      for (const auto& g : cert->generators) ok = ok && g.uses_only_variables(b, n);
      ok = ok && same_span(cert->generators, embedded_tail, n, d);
    }
    check.expect(ok, "mixed direct sum #" + std::to_string(i));
  }
  const std::vector<Polynomial> hidden = {
      Polynomial::term(Monomial({2, 0}), 1) - Polynomial::term(Monomial({0, 2}), 1),
      Polynomial::term(Monomial({1, 1}), 1)};
  check.expect(!recognize_decomposable(GradedIdeal(hidden), 1).has_value(), "(x1^2 - x2^2, x1*x2) certified");
}

void degeneration(Check& check) {
  t::Rng rng(5150);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const unsigned d = 2 + static_cast<unsigned>(i / 2 % 2);
    const std::size_t a = 1 + static_cast<std::size_t>(i % static_cast<int>(n - 1));
    // Head generators involve every variable, tail generators only the last n - a.
    std::vector<Polynomial> gs;
    for (;;) {
      gs.clear();
      const auto tail = t::random_regular_sequence(n - a, d, rng);
      const auto head_limit = t::random_regular_sequence(a, d, rng);
      for (const auto& h : head_limit) {
        Polynomial g = embed_block(h, n, 0);
        const Polynomial noise = t::random_form(n, d, rng, 0.5);
        for (const auto& [m, c] : noise.terms()) {
          if (m.tail_degree(a) > 0) g.add_term(m, c);
        }
        gs.push_back(g);
      }
      for (const auto& g : tail) gs.push_back(embed_block(g, n, a));
      if (is_regular_sequence(gs)) break;
    }
    const auto limit = degeneration_limit(gs, a);
    const auto oracle = lowest_weight_parts(gs, a);
    std::vector<Polynomial> head_block;
    std::vector<Polynomial> tail_block;
    for (std::size_t k = 0; k < a; ++k) head_block.push_back(restrict_to_block(oracle[k], 0, a));
    for (std::size_t k = a; k < n; ++k) tail_block.push_back(restrict_to_block(oracle[k], a, n - a));
    const bool ok = limit == oracle && associated_form(limit).form == direct_sum_assoc(head_block, tail_block);
    check.expect(ok, "degeneration #" + std::to_string(i));
  }
}

void mather_yau(Check& check) {
  const auto x = [](unsigned a, unsigned b) { return Polynomial::term(Monomial({a, b}), 1); };
  const Polynomial fermat = x(4, 0) + x(0, 4);
  const GITPoint p = mather_yau_point(fermat);
  check.expect(p.coordinates() == std::vector<Rational>{1, Rational(1, 27)}, "point of x1^4 + x2^4");
  check.expect(points_equal(p, mather_yau_point(x(3, 1) + x(1, 3))), "x1^3*x2 + x1*x2^3");
  t::Rng rng(2718);
  for (int i = 0; i < 10; ++i) {
    check.expect(points_equal(p, mather_yau_point(substitute(fermat, t::random_unimodular(2, rng)))),
                 "unimodular transform #" + std::to_string(i));
  }
  check.expect(!points_equal(p, mather_yau_point(x(4, 0) + x(1, 3))), "x1^4 + x1*x2^3 should differ");
}

void equivariance(Check& check) {
  t::Rng rng(1618);
  for (int i = 0; i < 20; ++i) {
    const auto [n, d] = kShapes[static_cast<std::size_t>(i) % kShapes.size()];
    const auto gs = t::random_regular_sequence(n, d, rng);
    const LinearMap m = t::random_unimodular(n, rng);
    const Polynomial lhs = associated_form(t::substitute_all(gs, m)).form;
    const Polynomial rhs = substitute(associated_form(gs).form, m.inverse_transpose());
    check.expect(m.det() == 1 && lhs == rhs, "substitution #" + std::to_string(i));
  }
}

void koszul(const std::vector<Instance>& instances, Check& check) {
  for (const auto& inst : instances) {
    const unsigned nu = static_cast<unsigned>(inst.n) * (inst.d - 1);
    check.expect(koszul_exactness_check(inst.gs, nu + inst.d), "not exact on regular " + describe(inst));
  }
  t::Rng rng(60221);
  for (int i = 0; i < 10; ++i) {
    const auto [n, d] = kShapes[static_cast<std::size_t>(i) % kShapes.size()];
    const auto gs = t::random_non_regular_sequence(n, d, rng);
    const Instance inst{n, d, gs};
    const unsigned nu = static_cast<unsigned>(n) * (d - 1);
    check.expect(!is_regular_sequence(gs) && !koszul_exactness_check(gs, nu + d), "exact on non-regular " + describe(inst));
  }
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Instance> instances = regular_instances();

  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"Macaulay round trip", [&](Check& c) { macaulay_round_trip(instances, c); }},
      {"Hilbert functions", [&](Check& c) { hilbert_functions(instances, c); }},
      {"Product formula", product_formula},
      {"Monomial example", monomial_example},
      {"Semistability evidence", [&](Check& c) { semistability_evidence(instances, c); }},
      {"Binary exactness", [&](Check& c) { binary_exactness(instances, c); }},
      {"Grevlex lemma", grevlex_lemma},
      {"Recognition certificate", recognition_certificate},
      {"Degeneration", degeneration},
      {"Mather-Yau desk demo", mather_yau},
      {"Equivariance", equivariance},
      {"Koszul", [&](Check& c) { koszul(instances, c); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (check.ok() ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " ("
              << check.summary() << ", " << timing << ")\n";
    failed += check.ok() ? 0 : 1;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " acceptance criteria passed in " << total << "s\n";
  return failed == 0 ? 0 : 1;
}
