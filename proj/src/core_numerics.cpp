#include "framex/core_numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "framex/errors.hpp"

namespace framex {

EquispacedGrid equispaced_grid(int m) {
  require(m >= 1, "equispaced_grid: m must be >= 1, got " + std::to_string(m));
  EquispacedGrid grid;
  grid.m = m;
  grid.nodes.resize(static_cast<std::size_t>(m) + 1);
  const double dm = m;
  for (int i = 0; i <= m; ++i) grid.nodes[i] = static_cast<double>(2 * i - m) / dm;
  return grid;
}

std::vector<double> fine_grid(int count) {
  require(count >= 2, "fine_grid: need at least 2 points, got " + std::to_string(count));
  return equispaced_grid(count - 1).nodes;
}

std::vector<double> legendre_eval(int n, double x) {
  require(n >= 0, "legendre_eval: negative degree");
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1.0;
  if (n >= 1) p[1] = x;
  for (int i = 1; i < n; ++i)
    p[i + 1] = ((2.0 * i + 1.0) * x * p[i] - i * p[i - 1]) / (i + 1.0);
  return p;
}

std::vector<double> legendre_deriv_eval(int n, int k, double x) {
  require(n >= 0 && k >= 0, "legendre_deriv_eval: negative degree or order");
  // Differentiating (i+1) P_{i+1} = (2i+1) x P_i - i P_{i-1} k times gives
  // (i+1) P_{i+1}^{(k)} = (2i+1) (x P_i^{(k)} + k P_i^{(k-1)}) - i P_{i-1}^{(k)}.
  std::vector<double> lower = legendre_eval(n, x);
  if (k == 0) return lower;
  std::vector<double> cur(lower.size());
  for (int order = 1; order <= k; ++order) {
    cur[0] = 0.0;
    if (n >= 1) cur[1] = order == 1 ? 1.0 : 0.0;
    for (int i = 1; i < n; ++i) {
      cur[i + 1] = ((2.0 * i + 1.0) * (x * cur[i] + order * lower[i]) - i * cur[i - 1]) / (i + 1.0);
    }
    std::swap(lower, cur);
  }
  return lower;
}

std::vector<double> chebyshev_eval(int n, double x) {
  require(n >= 0, "chebyshev_eval: negative degree");
  std::vector<double> t(static_cast<std::size_t>(n) + 1);
  t[0] = 1.0;
  if (n >= 1) t[1] = x;
  for (int i = 1; i < n; ++i) t[i + 1] = 2.0 * x * t[i] - t[i - 1];
  return t;
}

namespace {

// Returns (P_n(x), P_n'(x)).
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int i = 1; i < n; ++i) {
    const double p2 = ((2.0 * i + 1.0) * x * p1 - i * p0) / (i + 1.0);
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadratureRule gauss_legendre(int count, double a, double b) {
  require(count >= 1, "gauss_legendre: count must be >= 1");
  require(a < b, "gauss_legendre: need a < b");

  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(count);
  rule.weights.resize(count);

  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const int half_count = (count + 1) / 2;

  for (int i = 0; i < half_count; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    if (count % 2 == 1 && i == half_count - 1) x = 0.0;
    double dp = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, d] = legendre_with_derivative(count, x);
      dp = d;
      const double dx = p / d;
      x -= dx;
      if (std::abs(dx) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw NumericalFailure("gauss_legendre: Newton iteration did not converge for count=" +
                             std::to_string(count));
    dp = legendre_with_derivative(count, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Nodes ascending: the guess above walks from +1 towards 0.
    rule.nodes[count - 1 - i] = mid + half * x;
    rule.nodes[i] = mid - half * x;
    rule.weights[count - 1 - i] = half * w;
    rule.weights[i] = half * w;
  }
  if (count % 2 == 1) rule.nodes[count / 2] = mid;
  return rule;
}

DiscreteNorms discrete_norms(std::span<const complex> values) {
  require(!values.empty(), "discrete_norms: empty vector");
  DiscreteNorms out;
  double sum = 0.0;
  for (const auto& v : values) {
    const double a = std::abs(v);
    out.sup = std::max(out.sup, a);
    sum += a * a;
  }
  out.l2 = std::sqrt(2.0 / static_cast<double>(values.size()) * sum);
  return out;
}

DiscreteNorms discrete_norms(std::span<const double> values) {
  require(!values.empty(), "discrete_norms: empty vector");
  DiscreteNorms out;
  double sum = 0.0;
  for (double v : values) {
    out.sup = std::max(out.sup, std::abs(v));
    sum += v * v;
  }
  out.l2 = std::sqrt(2.0 / static_cast<double>(values.size()) * sum);
  return out;
}

}  // namespace framex
