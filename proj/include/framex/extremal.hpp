#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "framex/core_numerics.hpp"

namespace framex {

/// An extremal sup together with a polynomial that attains (or approaches) it.
struct ExtremalResult {
  double value = 0.0;
  std::vector<double> witness_coeffs;  ///< Legendre coefficients on [-1, 1]
  double witness_x = 0.0;
};

/// sum_i coeffs[i] P_i(x).
double legendre_series(std::span<const double> coeffs, double x);

/// sum_i coeffs[i] P_i^{(k)}(x).
double legendre_series_derivative(std::span<const double> coeffs, int k, double x);

/// Sup of |fn| on [a, b]: scan `grid_size` equispaced points, then refine the
/// best one by golden-section search between its neighbours. Returns
/// {sup, argmax}.
std::pair<double, double> refined_sup(const std::function<double(double)>& fn, double a, double b,
                                      int grid_size);

/// Exact B(m, n) = sup{ ||p||_[-1,1] : p in P_n, |p(x_i)| <= 1 } by enumerating
/// the vertices of the feasible polytope: interpolants of +-1 on (n+1)-subsets
/// of the nodes that stay within 1 at the remaining nodes. Desk scale only:
/// n <= m <= 12, n <= 6.
ExtremalResult bmn_oracle(int m, int n, int probe_grid_size = 2001);

struct CmnSearchBudget {
  int restarts = 50;
  int search_grid = 2001;   ///< interval sup resolution during the search
  int verify_grid = 10001;  ///< resolution for the final rescaling
  int max_trials = 20000;   ///< objective evaluations per restart
  std::uint64_t seed = 20211;
};

/// Certified lower bound on C(m, n, gamma, epsilon): a feasible polynomial
/// (|p| <= 1 at the nodes, |p| <= 1/epsilon on [-gamma, gamma]) found by
/// pattern search on the scale-invariant ratio, rescaled to satisfy both
/// constraints. Always >= 1. Requires 0 <= n <= m.
ExtremalResult cmn_lower_bound(int m, int n, double gamma, double epsilon,
                               const CmnSearchBudget& budget = {});

/// D_{n,k}(x) from Shadrin's closed form, |x| < 1 and 1 <= k <= n.
double schaeffer_duffin(int n, int k, double x);

/// k < n sqrt((1 - delta^2)/2).
bool markov_hypothesis(int n, int k, double delta);

/// 1.251 n^k / (1 - x^2)^{k/2}.
double markov_bound(int n, int k, double x);

struct MarkovSample {
  double derivative = 0.0;  ///< |p^{(k)}(x)|
  double sup = 0.0;         ///< ||p||_[-1,1]
  double sd_bound = 0.0;    ///< D_{n,k}(x) ||p||
  double markov = 0.0;      ///< 1.251 n^k / (1 - x^2)^{k/2} ||p||
};

/// Both derivative bounds for one polynomial at one point. n is the degree used
/// in the bounds; coeffs may have at most n+1 entries.
MarkovSample markov_sample(std::span<const double> coeffs, int n, int k, double x);

struct MarkovReport {
  int trials = 0;
  int markov_violations = 0;   ///< |p^{(k)}| > 1.251 n^k (1-x^2)^{-k/2} ||p||
  int sd_violations = 0;       ///< |p^{(k)}| > D_{n,k}(x) ||p||
  int d_bound_violations = 0;  ///< D_{n,k}(x) > 1.251 n^k (1-x^2)^{-k/2}
  double max_ratio_markov = 0.0;
  double max_ratio_sd = 0.0;

  bool passed() const { return markov_violations == 0 && sd_violations == 0 && d_bound_violations == 0; }
};

/// Random polynomials of degree n with random |x| <= delta. Throws
/// InvalidArgument when the hypothesis k < n sqrt((1-delta^2)/2) fails.
MarkovReport markov_check(int n, int k, double delta, int trials, std::uint64_t seed = 7);

struct LemmaTReport {
  double error = 0.0;  ///< sup |f - p| for the interpolant at Chebyshev zeros
  double bound = 0.0;  ///< (2/r!) ((b-a)/4)^r ||f^{(r)}||
  double derivative_sup = 0.0;

  bool passed() const { return error <= 2.0 * bound; }
};

/// Interpolates f at the r Chebyshev zeros on [a, b] (degree r-1) and compares
/// the sup error with the best-approximation bound.
LemmaTReport lemma_t_check(const std::function<double(double)>& f,
                           const std::function<double(double)>& f_r, double a, double b, int r,
                           int grid_size = 10001);

struct ChebyshevTruncation {
  std::vector<complex> coeffs;  ///< c_0 .. c_n
  double decay_rate = 0.0;      ///< fitted |c_{k+1}| / |c_k| over the fit window

  complex operator()(double x) const;
};

/// Chebyshev coefficients by Gauss-Chebyshev quadrature of size quad_size
/// (>= 4n), truncated at degree n. The decay rate is exp(slope) of a
/// least-squares line through log|c_k| for k in [fit_lo, fit_hi], skipping
/// coefficients at roundoff level (e.g. the odd ones of an even function).
ChebyshevTruncation chebyshev_truncation(const std::function<complex(double)>& f, int n, int quad_size,
                                         int fit_lo = 10, int fit_hi = 40);

/// Chebyshev coefficients c_0 .. c_{count-1} of f analytic inside E_rho, from
/// the Laurent coefficients of f((z + 1/z)/2) on |z| = rho by the trapezoidal
/// rule. The error in c_k scales like ||f||_{E_rho} rho^{-k}, so coefficients far
/// below roundoff relative to ||f|| keep their relative accuracy.
std::vector<complex> chebyshev_coefficients_contour(const std::function<complex(complex)>& f, double rho,
                                                    int count, int samples = 4096);

/// max over `points` of |sum_{k>n} c_k T_k(x)|, the error of truncating the
/// series at degree n, summed directly so that it stays meaningful below
/// roundoff level of f itself.
double chebyshev_tail_sup(std::span<const complex> coeffs, int n, std::span<const double> points);

/// max |f| over `samples` points of the Bernstein ellipse boundary
/// { (z + 1/z)/2 : |z| = theta }.
double ellipse_sup(const std::function<complex(complex)>& f, double theta, int samples = 4000);

/// (2 / (theta - 1)) ||f||_{E_theta} theta^{-n}.
double chebyshev_tail_bound(double theta, double ellipse_norm, int n);

}  // namespace framex
