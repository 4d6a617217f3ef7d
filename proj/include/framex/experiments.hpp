#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "framex/core_numerics.hpp"
#include "framex/frame_approx.hpp"

namespace framex {

enum class Smoothness { analytic, entire, finite };

/// A named function with the analyticity data that governs its approximation
/// rate.
struct TestFunction {
  std::string name;
  std::function<complex(double)> eval;
  std::function<complex(complex)> eval_complex;  ///< analytic continuation
  double theta_star = std::numeric_limits<double>::infinity();
  std::optional<double> omega;
  Smoothness smoothness = Smoothness::analytic;

  complex operator()(double x) const { return eval(x); }
};

/// exp(i omega pi x).
TestFunction oscillatory(double omega);

/// runge1, fig2_f1, fig2_f2, fig2_f3, osc(omega), fig4_f1, fig4_f2.
std::vector<TestFunction> registry(double osc_omega = 10.0);

/// Looks up a registry entry. "osc" uses `omega`; "osc:40" overrides it.
TestFunction find_function(std::string_view name, double omega = 10.0);

/// gamma + sqrt(gamma^2 - 1).
double tau_of_gamma(double gamma);

/// epsilon^{log theta / log tau(gamma)}; requires 1 < theta < tau(gamma).
double breakpoint(double epsilon, double theta, double gamma);

/// theta^{c*}, c* = sqrt(gamma^2 - 1) / (36 log(1/epsilon)).
double rho_rate(double theta, double epsilon, double gamma);

/// pi gamma omega.
double resolution_point(double omega, double gamma);

struct SweepRecord {
  std::string function;
  int n = 0;
  int m = 0;
  double gamma = 1.0;
  double epsilon = 0.0;
  double eta = 0.0;
  double error_inf = 0.0;
  double error_l2 = 0.0;
  double cond_2 = 0.0;
  double cond_inf = 0.0;
  std::string flag = "ok";  ///< ok | numerical_failure | unsatisfiable

  bool operator==(const SweepRecord&) const = default;
};

/// How m follows from n in an error-vs-n sweep.
struct SampleRule {
  enum class Kind { oversampling, paper_scaling };
  Kind kind = Kind::oversampling;
  double eta = 2.0;

  /// m = ceil(eta n).
  static SampleRule oversampling(double eta) { return {Kind::oversampling, eta}; }
  /// m = ceil(36 n log(1/eps) / sqrt(gamma^2 - 1)), truncation at
  /// eps (n+1) / sqrt(gamma).
  static SampleRule paper_scaling() { return {Kind::paper_scaling, 0.0}; }

  int m_for(int n, double epsilon, double gamma) const;
  double truncation(int n, double epsilon, double gamma) const;
};

struct SweepOptions {
  int fine_grid = 50000;  ///< error evaluation grid
  int cond_grid = 50000;  ///< grid for cond_2 and cond_inf
  double noise = 0.0;     ///< uniform sample perturbation amplitude
  std::uint64_t seed = 1;
};

/// One record per n: fit exact (optionally perturbed) samples and measure
/// errors and condition numbers. Numerical failures are flagged per record.
std::vector<SweepRecord> sweep_error_vs_n(const TestFunction& f, double gamma, double epsilon,
                                          SampleRule rule, std::span<const int> n_list,
                                          const SweepOptions& options = {});

/// A scheme in the fixed-condition-number comparison.
struct Fig4Scheme {
  enum class Kind { pls, fixed, varying };
  Kind kind = Kind::fixed;
  double gamma = 1.25;
  double epsilon = 1e-14;  ///< fixed threshold, or the floor in varying mode
  double theta = 2.0;      ///< varying mode: epsilon = max(theta^{-n}, floor)

  /// Polynomial least squares: gamma = 1, epsilon = 0.
  static Fig4Scheme pls() { return {Kind::pls, 1.0, 0.0, 0.0}; }
  static Fig4Scheme fixed(double gamma, double epsilon) { return {Kind::fixed, gamma, epsilon, 0.0}; }
  static Fig4Scheme varying(double gamma, double theta, double floor = 1e-14) {
    return {Kind::varying, gamma, floor, theta};
  }

  double epsilon_for(int n) const;
  std::string label() const;
};

struct Fig4Options {
  double kappa_star = 100.0;
  int m_max = 20000;
  int fine_grid = 50000;  ///< error grid and cond_2 grid
  int cond_grid = 50000;  ///< grid for the reported cond_inf
};

/// Smallest m in [n, m_max] with cond_2 <= kappa_star, by bisection assuming
/// cond_2 is nonincreasing in m; a few probes below the result check that
/// assumption and trigger a linear scan if it fails. nullopt if even m_max
/// does not meet kappa_star.
std::optional<int> smallest_m_for_condition(const FrameSpec& spec, double epsilon, double kappa_star,
                                            int m_max, const Eigen::MatrixXd& factor);

std::vector<SweepRecord> sweep_fig4(const TestFunction& f, const Fig4Scheme& scheme,
                                    std::span<const int> n_list, const Fig4Options& options = {});

/// Orders by (function, gamma, epsilon, n), then eta and m.
void sort_records(std::vector<SweepRecord>& records);

/// A list A, A+step, ..., <= B.
std::vector<int> n_range(int first, int last, int step);

}  // namespace framex
