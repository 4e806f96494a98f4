#include "min_norm_point.hpp"

#include <algorithm>

#include "assoform/errors.hpp"

namespace assoform::detail {

namespace {

QVector combine(const std::vector<QVector>& points, const std::vector<std::size_t>& active,
                const QVector& weights) {
  QVector out(points.front().size());
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (weights[i].is_zero()) continue;
    const QVector& p = points[active[i]];
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += weights[i] * p[c];
  }
  return out;
}

// Minimizes |sum a_i p_i| over the affine hull: sum a_i = 1.
QVector affine_minimizer(const std::vector<QVector>& points, const std::vector<std::size_t>& active) {
  const std::size_t s = active.size();
  QMatrix system(s + 1, s + 1);
  QVector rhs(s + 1);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) system(i, j) = dot(points[active[i]], points[active[j]]);
    system(i, s) = 1;
    system(s, i) = 1;
  }
  rhs[s] = 1;
  auto solution = solve(system, rhs);
  if (!solution) throw InternalError("min-norm point: affinely dependent corral");
  solution->pop_back();
  return *solution;
}

}  // namespace

QVector min_norm_point(const std::vector<QVector>& points) {
  if (points.empty()) throw InvalidArgument("min-norm point of an empty set");

  std::size_t start = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (dot(points[i], points[i]) < dot(points[start], points[start])) start = i;
  }
  std::vector<std::size_t> active{start};
  QVector lambda{Rational(1)};
  QVector x = points[start];

  const std::size_t max_iterations = 100 * points.size() + 1000;
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    const Rational xx = dot(x, x);
    if (xx.is_zero()) return x;
    std::size_t best = 0;
    Rational best_value = dot(x, points[0]);
    for (std::size_t i = 1; i < points.size(); ++i) {
      Rational v = dot(x, points[i]);
      if (v < best_value) {
        best = i;
        best_value = std::move(v);
      }
    }
    if (best_value >= xx) return x;
    if (std::find(active.begin(), active.end(), best) != active.end()) {
      throw InternalError("min-norm point: optimality test selected an active point");
    }
    active.push_back(best);
    lambda.push_back(0);

    for (;;) {
      const QVector alpha = affine_minimizer(points, active);
      if (std::all_of(alpha.begin(), alpha.end(), [](const Rational& a) { return a.sign() > 0; })) {
        lambda = alpha;
        x = combine(points, active, lambda);
        break;
      }
      // Step from lambda toward alpha until some weight hits zero.
      Rational theta = 1;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (alpha[i].sign() > 0) continue;
        const Rational gap = lambda[i] - alpha[i];
        const Rational ratio = gap.is_zero() ? Rational(0) : lambda[i] / gap;
        theta = std::min(theta, ratio);
      }
      for (std::size_t i = 0; i < active.size(); ++i) lambda[i] = theta * alpha[i] + (1 - theta) * lambda[i];
      std::vector<std::size_t> kept;
      QVector kept_lambda;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (lambda[i].sign() > 0) {
          kept.push_back(active[i]);
          kept_lambda.push_back(lambda[i]);
        }
      }
      active = std::move(kept);
      lambda = std::move(kept_lambda);
      x = combine(points, active, lambda);
    }
  }
  throw InternalError("min-norm point: iteration limit reached");
}

}  // namespace assoform::detail
