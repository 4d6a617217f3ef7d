#include "framex/extremal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "framex/errors.hpp"
#include "framex/parallel.hpp"

namespace framex {

namespace {

constexpr double kNodeTolerance = 1e-10;
constexpr double kBoundTolerance = 1e-10;

// Maximizes g on [lo, hi]; returns {value, argmax}.
std::pair<double, double> golden_max(const std::function<double(double)>& g, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c), gd = g(d);
  for (int iter = 0; iter < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(a) + std::abs(b)); ++iter) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
  }
  std::pair<double, double> best{g(lo), lo};
  for (double x : {hi, c, d, 0.5 * (a + b)}) {
    const double v = g(x);
    if (v > best.first) best = {v, x};
  }
  return best;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

double double_factorial_odd(int m) {
  // (2m - 1)!!, with (-1)!! = 1.
  double out = 1.0;
  for (int j = 1; j <= 2 * m - 1; j += 2) out *= j;
  return out;
}

// Legendre basis matrix B(i, j) = P_j(points[i]).
Eigen::MatrixXd legendre_matrix(std::span<const double> points, int n) {
  Eigen::MatrixXd b(static_cast<Eigen::Index>(points.size()), n + 1);
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    const auto p = legendre_eval(n, points[i]);
    for (int j = 0; j <= n; ++j) b(i, j) = p[j];
  }
  return b;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

double legendre_series(std::span<const double> coeffs, double x) {
  if (coeffs.empty()) return 0.0;
  const auto p = legendre_eval(static_cast<int>(coeffs.size()) - 1, x);
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * p[i];
  return acc;
}

double legendre_series_derivative(std::span<const double> coeffs, int k, double x) {
  if (coeffs.empty()) return 0.0;
  const auto p = legendre_deriv_eval(static_cast<int>(coeffs.size()) - 1, k, x);
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * p[i];
  return acc;
}

std::pair<double, double> refined_sup(const std::function<double(double)>& fn, double a, double b,
                                      int grid_size) {
  require(grid_size >= 2 && a < b, "refined_sup: need a < b and at least 2 grid points");
  const auto unit = fine_grid(grid_size);
  std::vector<double> xs(unit.size());
  for (std::size_t i = 0; i < unit.size(); ++i) xs[i] = 0.5 * (a + b) + 0.5 * (b - a) * unit[i];
  xs.front() = a;
  xs.back() = b;
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double v = std::abs(fn(xs[i]));
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const double lo = xs[best == 0 ? 0 : best - 1];
  const double hi = xs[std::min(best + 1, xs.size() - 1)];
  const auto refined = golden_max([&](double x) { return std::abs(fn(x)); }, lo, hi);
  if (refined.first > best_value) return refined;
  return {best_value, xs[best]};
}

ExtremalResult bmn_oracle(int m, int n, int probe_grid_size) {
  require(m >= 1 && n >= 0 && n <= m, "bmn_oracle: need 0 <= n <= m, m >= 1");
  require(m <= 12 && n <= 6,
          "bmn_oracle: vertex enumeration is limited to m <= 12 and n <= 6 (got m=" + std::to_string(m) +
              ", n=" + std::to_string(n) + ")");
  require(probe_grid_size >= 2, "bmn_oracle: probe grid needs at least 2 points");

  if (n == 0) return {1.0, {1.0}, -1.0};

  const auto nodes = equispaced_grid(m).nodes;
  const auto probes = fine_grid(probe_grid_size);
  const int node_count = m + 1;
  const int size = n + 1;

  std::vector<unsigned> subsets;
  for (unsigned mask = 0; mask < (1u << node_count); ++mask)
    if (std::popcount(mask) == size) subsets.push_back(mask);

  struct Candidate {
    double value = -1.0;
    double x = 0.0;
    unsigned signs = 0;
  };
  std::vector<Candidate> per_subset(subsets.size());

  parallel_for(subsets.size(), [&](std::size_t s) {
    std::vector<double> sub;
    for (int i = 0; i < node_count; ++i)
      if (subsets[s] & (1u << i)) sub.push_back(nodes[i]);
    std::vector<double> denom(size, 1.0);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        if (j != i) denom[i] *= sub[i] - sub[j];
    auto basis = [&](double x, std::vector<double>& out) {
      for (int i = 0; i < size; ++i) {
        double v = 1.0;
        for (int j = 0; j < size; ++j)
          if (j != i) v *= x - sub[j];
        out[i] = v / denom[i];
      }
    };
    Eigen::MatrixXd ln(node_count, size), lp(static_cast<Eigen::Index>(probes.size()), size);
    std::vector<double> row(size);
    for (int k = 0; k < node_count; ++k) {
      basis(nodes[k], row);
      for (int i = 0; i < size; ++i) ln(k, i) = row[i];
    }
    for (std::size_t k = 0; k < probes.size(); ++k) {
      basis(probes[k], row);
      for (int i = 0; i < size; ++i) lp(static_cast<Eigen::Index>(k), i) = row[i];
    }

    struct Probe {
      double value;
      std::size_t index;
      unsigned signs;
    };
    std::vector<Probe> feasible;
    Eigen::VectorXd sign(size);
    for (unsigned pattern = 0; pattern < (1u << n); ++pattern) {
      sign[0] = 1.0;
      for (int i = 1; i < size; ++i) sign[i] = (pattern & (1u << (i - 1))) ? -1.0 : 1.0;
      const Eigen::VectorXd at_nodes = ln * sign;
      if (at_nodes.cwiseAbs().maxCoeff() > 1.0 + kNodeTolerance) continue;
      const Eigen::VectorXd at_probes = lp * sign;
      Eigen::Index idx = 0;
      const double v = at_probes.cwiseAbs().maxCoeff(&idx);
      feasible.push_back({v, static_cast<std::size_t>(idx), pattern});
    }
    if (feasible.empty()) return;
    double top = 0.0;
    for (const auto& f : feasible) top = std::max(top, f.value);

    Candidate best;
    for (const auto& f : feasible) {
      if (f.value < top * (1.0 - 1e-4)) continue;
      sign[0] = 1.0;
      for (int i = 1; i < size; ++i) sign[i] = (f.signs & (1u << (i - 1))) ? -1.0 : 1.0;
      auto abs_p = [&](double x) {
        std::vector<double> r(size);
        basis(x, r);
        double acc = 0.0;
        for (int i = 0; i < size; ++i) acc += sign[i] * r[i];
        return std::abs(acc);
      };
      const double lo = probes[f.index == 0 ? 0 : f.index - 1];
      const double hi = probes[std::min(f.index + 1, probes.size() - 1)];
      auto refined = golden_max(abs_p, lo, hi);
      if (refined.first < f.value) refined = {f.value, probes[f.index]};
      if (refined.first > best.value) best = {refined.first, refined.second, f.signs};
    }
    per_subset[s] = best;
  });

  std::size_t winner = 0;
  for (std::size_t s = 1; s < per_subset.size(); ++s)
    if (per_subset[s].value > per_subset[winner].value) winner = s;
  const auto& best = per_subset[winner];
  if (best.value < 0.0) throw NumericalFailure("bmn_oracle: no feasible vertex found");

  // Legendre coefficients of the winning interpolant.
  std::vector<double> sub;
  for (int i = 0; i < node_count; ++i)
    if (subsets[winner] & (1u << i)) sub.push_back(nodes[i]);
  const Eigen::MatrixXd p = legendre_matrix(sub, n);
  Eigen::VectorXd rhs(size);
  rhs[0] = 1.0;
  for (int i = 1; i < size; ++i) rhs[i] = (best.signs & (1u << (i - 1))) ? -1.0 : 1.0;
  const Eigen::VectorXd coeffs = p.partialPivLu().solve(rhs);
  return {best.value, to_std(coeffs), best.x};
}

ExtremalResult cmn_lower_bound(int m, int n, double gamma, double epsilon, const CmnSearchBudget& budget) {
  require(m >= 1 && n >= 0 && n <= m, "cmn_lower_bound: need 0 <= n <= m, m >= 1");
  require(gamma >= 1.0, "cmn_lower_bound: gamma must be >= 1");
  require(epsilon >= 0.0 && epsilon <= 1.0, "cmn_lower_bound: epsilon must lie in [0, 1]");
  require(budget.restarts >= 0 && budget.search_grid >= 2 && budget.verify_grid >= 2,
          "cmn_lower_bound: invalid search budget");

  const auto nodes = equispaced_grid(m).nodes;
  const auto inner = fine_grid(budget.search_grid);
  std::vector<double> outer(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) outer[i] = gamma * inner[i];

  const Eigen::MatrixXd bn = legendre_matrix(nodes, n);
  const Eigen::MatrixXd bi = legendre_matrix(inner, n);
  const Eigen::MatrixXd be = legendre_matrix(outer, n);

  auto ratio = [&](const Eigen::VectorXd& vn, const Eigen::VectorXd& vi, const Eigen::VectorXd& ve) {
    double den = vn.cwiseAbs().maxCoeff();
    if (epsilon > 0.0) den = std::max(den, epsilon * ve.cwiseAbs().maxCoeff());
    return den > 0.0 ? vi.cwiseAbs().maxCoeff() / den : 0.0;
  };
  auto denominator = [&](const Eigen::VectorXd& vn, const Eigen::VectorXd& ve) {
    double den = vn.cwiseAbs().maxCoeff();
    if (epsilon > 0.0) den = std::max(den, epsilon * ve.cwiseAbs().maxCoeff());
    return den;
  };

  std::vector<Eigen::VectorXd> starts;
  starts.push_back(Eigen::VectorXd::Unit(n + 1, 0));
  if (m <= 12 && n <= 6 && n >= 1) {
    const auto w = bmn_oracle(m, n);
    starts.push_back(Eigen::Map<const Eigen::VectorXd>(w.witness_coeffs.data(), n + 1));
  }
  {
    std::mt19937_64 rng(budget.seed);
    std::normal_distribution<double> normal;
    for (int r = 0; r < budget.restarts; ++r) {
      Eigen::VectorXd c(n + 1);
      for (int j = 0; j <= n; ++j) c[j] = normal(rng);
      starts.push_back(c);
    }
  }

  struct Local {
    double ratio = 0.0;
    Eigen::VectorXd coeffs;
  };
  std::vector<Local> results(starts.size());

  parallel_for(starts.size(), [&](std::size_t s) {
    std::mt19937_64 rng(budget.seed + 7919 * (s + 1));
    std::normal_distribution<double> normal;
    Eigen::VectorXd c = starts[s];
    Eigen::VectorXd vn = bn * c, vi = bi * c, ve = be * c;
    double den = denominator(vn, ve);
    if (den <= 0.0) return;
    c /= den;
    vn /= den;
    vi /= den;
    ve /= den;
    double best = ratio(vn, vi, ve);
    double step = 0.5;
    int trials = 0;
    Eigen::VectorXd dir(n + 1);
    while (step > 1e-9 && trials < budget.max_trials) {
      bool improved = false;
      const int directions = n + 1 + 2;
      for (int d = 0; d < directions && trials < budget.max_trials; ++d) {
        Eigen::VectorXd dn, di, de;
        if (d <= n) {
          dir = Eigen::VectorXd::Unit(n + 1, d);
          dn = bn.col(d);
          di = bi.col(d);
          de = be.col(d);
        } else {
          for (int j = 0; j <= n; ++j) dir[j] = normal(rng);
          dir.normalize();
          dn = bn * dir;
          di = bi * dir;
          de = be * dir;
        }
        for (double sgn : {1.0, -1.0}) {
          ++trials;
          const double h = sgn * step;
          Eigen::VectorXd tn = vn + h * dn, ti = vi + h * di, te = ve + h * de;
          const double r = ratio(tn, ti, te);
          if (r > best * (1.0 + 1e-13)) {
            const double scale = denominator(tn, te);
            c = (c + h * dir) / scale;
            vn = tn / scale;
            vi = ti / scale;
            ve = te / scale;
            best = r;
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    results[s] = {best, c};
  });

  std::size_t winner = 0;
  for (std::size_t s = 1; s < results.size(); ++s)
    if (results[s].ratio > results[winner].ratio) winner = s;

  auto certify = [&](const Eigen::VectorXd& coeffs) -> ExtremalResult {
    std::vector<double> c = to_std(coeffs);
    auto abs_p = [&](double x) { return std::abs(legendre_series(c, x)); };
    double node_max = 0.0;
    for (double x : nodes) node_max = std::max(node_max, abs_p(x));
    double scale = node_max;
    if (epsilon > 0.0) scale = std::max(scale, epsilon * refined_sup(abs_p, -gamma, gamma, budget.verify_grid).first);
    if (scale <= 0.0) return {0.0, c, 0.0};
    for (double& v : c) v /= scale;
    const auto [sup, at] = refined_sup(abs_p, -1.0, 1.0, budget.verify_grid);
    (void)sup;
    return {abs_p(at), c, at};
  };

  ExtremalResult out = certify(Eigen::VectorXd::Unit(n + 1, 0));
  if (results[winner].coeffs.size() == n + 1) {
    ExtremalResult found = certify(results[winner].coeffs);
    if (found.value > out.value) out = std::move(found);
  }
  return out;
}

double schaeffer_duffin(int n, int k, double x) {
  require(std::abs(x) < 1.0, "schaeffer_duffin: need |x| < 1");
  require(k >= 1 && k <= n, "schaeffer_duffin: need 1 <= k <= n");
  const double n2 = static_cast<double>(n) * n;
  const double one_minus = 1.0 - x * x;

  if (n <= 40) {
    double sum = 0.0;
    for (int m = 0; m < k; ++m) {
      const double c = m == 0 ? 1.0 : binomial(k - 1 + m, 2 * m) * std::pow(double_factorial_odd(m), 2);
      double b = c;
      for (int s = m + 1; s <= k - 1; ++s) b *= n2 - static_cast<double>(s) * s;
      sum += b / std::pow(one_minus, k + m);
    }
    return n * std::sqrt(sum);
  }

  // Log-domain evaluation: the products of (n^2 - s^2) overflow for large n.
  const double log_one_minus = std::log1p(-x * x);
  std::vector<double> logs;
  logs.reserve(k);
  for (int m = 0; m < k; ++m) {
    double log_c = 0.0;
    if (m > 0) log_c = std::log(binomial(k - 1 + m, 2 * m)) + 2.0 * std::log(double_factorial_odd(m));
    double log_b = log_c;
    for (int s = m + 1; s <= k - 1; ++s) log_b += std::log(n2 - static_cast<double>(s) * s);
    logs.push_back(log_b - (k + m) * log_one_minus);
  }
  const double top = *std::max_element(logs.begin(), logs.end());
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - top);
  return n * std::exp(0.5 * (top + std::log(acc)));
}

bool markov_hypothesis(int n, int k, double delta) {
  return n >= 1 && k >= 1 && delta > 0.0 && delta < 1.0 && k < n * std::sqrt((1.0 - delta * delta) / 2.0);
}

double markov_bound(int n, int k, double x) {
  return 1.251 * std::pow(static_cast<double>(n), k) / std::pow(1.0 - x * x, 0.5 * k);
}

MarkovSample markov_sample(std::span<const double> coeffs, int n, int k, double x) {
  require(!coeffs.empty() && static_cast<int>(coeffs.size()) <= n + 1, "markov_sample: degree exceeds n");
  MarkovSample out;
  out.derivative = std::abs(legendre_series_derivative(coeffs, k, x));
  out.sup = refined_sup([&](double t) { return legendre_series(coeffs, t); }, -1.0, 1.0, 10001).first;
  out.sd_bound = schaeffer_duffin(n, k, x) * out.sup;
  out.markov = markov_bound(n, k, x) * out.sup;
  return out;
}

MarkovReport markov_check(int n, int k, double delta, int trials, std::uint64_t seed) {
  require(markov_hypothesis(n, k, delta),
          "markov_check: hypothesis k < n sqrt((1 - delta^2)/2) fails for n=" + std::to_string(n) +
              ", k=" + std::to_string(k) + ", delta=" + std::to_string(delta));
  require(trials >= 0, "markov_check: negative trial count");

  MarkovReport report;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> point(-delta, delta);
  std::vector<double> coeffs(n + 1);
  for (int t = 0; t < trials; ++t) {
    for (double& c : coeffs) c = normal(rng);
    const double x = point(rng);
    const auto s = markov_sample(coeffs, n, k, x);
    const double d = schaeffer_duffin(n, k, x);
    const double r_markov = s.derivative / s.markov;
    const double r_sd = s.derivative / s.sd_bound;
    report.max_ratio_markov = std::max(report.max_ratio_markov, r_markov);
    report.max_ratio_sd = std::max(report.max_ratio_sd, r_sd);
    if (r_markov > 1.0 + kBoundTolerance) ++report.markov_violations;
    if (r_sd > 1.0 + kBoundTolerance) ++report.sd_violations;
    if (d > markov_bound(n, k, x) * (1.0 + kBoundTolerance)) ++report.d_bound_violations;
  }
  return report;
}

LemmaTReport lemma_t_check(const std::function<double(double)>& f, const std::function<double(double)>& f_r,
                           double a, double b, int r, int grid_size) {
  require(r >= 1, "lemma_t_check: r must be >= 1");
  require(a < b, "lemma_t_check: need a < b");
  require(grid_size >= 2, "lemma_t_check: grid needs at least 2 points");

  // Chebyshev zeros of T_r mapped to [a, b], with first-kind barycentric weights.
  std::vector<double> xs(r), ws(r), fs(r);
  for (int i = 0; i < r; ++i) {
    const double angle = (2.0 * i + 1.0) * std::numbers::pi / (2.0 * r);
    xs[i] = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(angle);
    ws[i] = (i % 2 == 0 ? 1.0 : -1.0) * std::sin(angle);
    fs[i] = f(xs[i]);
  }
  auto interpolant = [&](double x) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < r; ++i) {
      const double diff = x - xs[i];
      if (diff == 0.0) return fs[i];
      const double t = ws[i] / diff;
      num += t * fs[i];
      den += t;
    }
    return num / den;
  };

  LemmaTReport report;
  const auto unit = fine_grid(grid_size);
  for (std::size_t j = 0; j < unit.size(); ++j) {
    double x = 0.5 * (a + b) + 0.5 * (b - a) * unit[j];
    if (j == 0) x = a;
    if (j + 1 == unit.size()) x = b;
    report.error = std::max(report.error, std::abs(f(x) - interpolant(x)));
    report.derivative_sup = std::max(report.derivative_sup, std::abs(f_r(x)));
  }
  double factorial = 1.0;
  for (int i = 2; i <= r; ++i) factorial *= i;
  report.bound = 2.0 / factorial * std::pow((b - a) / 4.0, r) * report.derivative_sup;
  return report;
}

complex ChebyshevTruncation::operator()(double x) const {
  if (coeffs.empty()) return 0.0;
  const auto t = chebyshev_eval(static_cast<int>(coeffs.size()) - 1, x);
  complex acc = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) acc += coeffs[k] * t[k];
  return acc;
}

ChebyshevTruncation chebyshev_truncation(const std::function<complex(double)>& f, int n, int quad_size,
                                         int fit_lo, int fit_hi) {
  require(n >= 0, "chebyshev_truncation: n must be >= 0");
  require(quad_size >= 4 * n && quad_size >= 1, "chebyshev_truncation: quad_size must be >= 4n");

  std::vector<complex> values(quad_size);
  std::vector<double> angles(quad_size);
  for (int j = 0; j < quad_size; ++j) {
    angles[j] = std::numbers::pi * (j + 0.5) / quad_size;
    values[j] = f(std::cos(angles[j]));
  }
  ChebyshevTruncation out;
  out.coeffs.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    complex acc = 0.0;
    for (int j = 0; j < quad_size; ++j) acc += values[j] * std::cos(k * angles[j]);
    out.coeffs[k] = acc * (2.0 / quad_size);
  }
  out.coeffs[0] *= 0.5;

  double scale = 0.0;
  for (const auto& c : out.coeffs) scale = std::max(scale, std::abs(c));
  const int lo = std::max(0, fit_lo);
  const int hi = std::min(n, fit_hi);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int k = lo; k <= hi; ++k) {
    const double a = std::abs(out.coeffs[k]);
    if (a <= 1e3 * std::numeric_limits<double>::epsilon() * scale || a == 0.0) continue;
    const double y = std::log(a);
    sx += k;
    sy += y;
    sxx += static_cast<double>(k) * k;
    sxy += k * y;
    ++count;
  }
  if (count >= 2) {
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    out.decay_rate = std::exp(slope);
  }
  return out;
}

std::vector<complex> chebyshev_coefficients_contour(const std::function<complex(complex)>& f, double rho,
                                                    int count, int samples) {
  require(rho > 1.0, "chebyshev_coefficients_contour: rho must be > 1");
  require(count >= 1 && samples >= 2 * count, "chebyshev_coefficients_contour: need samples >= 2 count >= 2");
  std::vector<complex> values(samples), roots(samples);
  for (int j = 0; j < samples; ++j) {
    roots[j] = std::polar(1.0, -2.0 * std::numbers::pi * j / samples);
    const complex z = rho * std::conj(roots[j]);
    values[j] = f(0.5 * (z + 1.0 / z));
  }
  std::vector<complex> out(count);
  for (int k = 0; k < count; ++k) {
    complex acc = 0.0;
    for (int j = 0; j < samples; ++j) acc += values[j] * roots[(static_cast<long long>(j) * k) % samples];
    out[k] = acc * ((k == 0 ? 1.0 : 2.0) * std::pow(rho, -k) / samples);
  }
  return out;
}

double chebyshev_tail_sup(std::span<const complex> coeffs, int n, std::span<const double> points) {
  require(n >= 0, "chebyshev_tail_sup: n must be >= 0");
  double best = 0.0;
  for (double x : points) {
    complex acc = 0.0;
    double t_prev = 1.0, t = x;
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
      if (static_cast<int>(k) > n) acc += coeffs[k] * t;
      const double next = 2.0 * x * t - t_prev;
      t_prev = t;
      t = next;
    }
    best = std::max(best, std::abs(acc));
  }
  return best;
}

double ellipse_sup(const std::function<complex(complex)>& f, double theta, int samples) {
  require(theta > 1.0, "ellipse_sup: theta must be > 1");
  require(samples >= 1, "ellipse_sup: need at least one sample");
  double best = 0.0;
  for (int j = 0; j < samples; ++j) {
    const complex z = std::polar(theta, 2.0 * std::numbers::pi * j / samples);
    best = std::max(best, std::abs(f(0.5 * (z + 1.0 / z))));
  }
  return best;
}

double chebyshev_tail_bound(double theta, double ellipse_norm, int n) {
  require(theta > 1.0, "chebyshev_tail_bound: theta must be > 1");
  return 2.0 / (theta - 1.0) * ellipse_norm * std::pow(theta, -n);
}

}  // namespace framex
