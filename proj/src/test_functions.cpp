#include <cmath>
#include <numbers>
#include <string>

#include "framex/errors.hpp"
#include "framex/experiments.hpp"

namespace framex {

namespace {

using std::numbers::pi;

const complex kI(0.0, 1.0);

TestFunction make(std::string name, std::function<complex(complex)> fz, double theta) {
  TestFunction f;
  f.name = std::move(name);
  f.eval = [fz](double x) { return fz(complex(x, 0.0)); };
  f.eval_complex = std::move(fz);
  f.theta_star = theta;
  f.smoothness = Smoothness::analytic;
  return f;
}

}  // namespace

TestFunction oscillatory(double omega) {
  require(omega > 0.0, "oscillatory: omega must be > 0");
  TestFunction f;
  f.name = "osc";
  f.eval = [omega](double x) { return std::exp(kI * (omega * pi * x)); };
  f.eval_complex = [omega](complex z) { return std::exp(kI * (omega * pi) * z); };
  f.omega = omega;
  f.smoothness = Smoothness::entire;
  return f;
}

std::vector<TestFunction> registry(double osc_omega) {
  std::vector<TestFunction> out;
  out.push_back(make("runge1", [](complex z) { return 1.0 / (1.0 + z * z); }, std::sqrt(2.0) + 1.0));
  out.push_back(make("fig2_f1", [](complex z) { return 1.0 / (1.0 + 4.0 * z * z); }, 0.5 * (1.0 + std::sqrt(5.0))));
  out.push_back(make("fig2_f2", [](complex z) { return 1.0 / (10.0 - 9.0 * z); }, (10.0 + std::sqrt(19.0)) / 9.0));
  {
    // 25 sqrt(9x^2 - 10) is 25 i sqrt(10 - 9x^2) on [-1, 1]; the latter form
    // keeps the branch cuts on the real axis outside [-sqrt(10/9), sqrt(10/9)].
    auto f = make("fig2_f3", [](complex z) { return 25.0 * kI * std::sqrt(10.0 - 9.0 * z * z); },
                  std::sqrt(10.0 / 9.0) + 1.0 / 3.0);
    f.eval = [](double x) { return 25.0 * std::sqrt(complex(9.0 * x * x - 10.0, 0.0)); };
    out.push_back(std::move(f));
  }
  out.push_back(oscillatory(osc_omega));
  out.push_back(make("fig4_f1", [](complex z) { return 1.0 / (1.0 + 16.0 * z * z); }, (std::sqrt(17.0) + 1.0) / 4.0));
  out.push_back(make("fig4_f2", [](complex z) { return 1.0 / (30.0 - 29.0 * z); }, (30.0 + std::sqrt(59.0)) / 29.0));
  return out;
}

TestFunction find_function(std::string_view name, double omega) {
  if (name.starts_with("osc:")) {
    const std::string value(name.substr(4));
    try {
      return oscillatory(std::stod(value));
    } catch (const std::logic_error&) {
      throw InvalidArgument("find_function: bad frequency in '" + std::string(name) + "'");
    }
  }
  for (auto& f : registry(omega))
    if (f.name == name) return f;
  throw InvalidArgument("unknown function '" + std::string(name) +
                        "' (known: runge1, fig2_f1, fig2_f2, fig2_f3, osc, osc:W, fig4_f1, fig4_f2)");
}

double tau_of_gamma(double gamma) {
  require(gamma >= 1.0, "tau_of_gamma: gamma must be >= 1");
  return gamma + std::sqrt(gamma * gamma - 1.0);
}

double breakpoint(double epsilon, double theta, double gamma) {
  const double tau = tau_of_gamma(gamma);
  require(theta > 1.0, "breakpoint: theta must be > 1");
  require(theta < tau, "breakpoint: theta must be < tau(gamma); no breakpoint when the ellipse covers [-gamma, gamma]");
  require(epsilon > 0.0, "breakpoint: epsilon must be > 0");
  return std::pow(epsilon, std::log(theta) / std::log(tau));
}

double rho_rate(double theta, double epsilon, double gamma) {
  require(theta > 1.0 && gamma > 1.0, "rho_rate: need theta > 1 and gamma > 1");
  require(epsilon > 0.0 && epsilon <= std::exp(-1.0) * (1.0 + 1e-15), "rho_rate: epsilon must lie in (0, 1/e]");
  const double c_star = std::sqrt(gamma * gamma - 1.0) / (36.0 * std::log(1.0 / epsilon));
  return std::pow(theta, c_star);
}

double resolution_point(double omega, double gamma) {
  require(omega > 0.0 && gamma >= 1.0, "resolution_point: need omega > 0 and gamma >= 1");
  return pi * gamma * omega;
}

}  // namespace framex
