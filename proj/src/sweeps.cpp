#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <tuple>

#include "framex/errors.hpp"
#include "framex/experiments.hpp"
#include "framex/parallel.hpp"

namespace framex {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void fill_failure(SweepRecord& r, std::string flag) {
  r.error_inf = r.error_l2 = r.cond_2 = r.cond_inf = kNaN;
  r.flag = std::move(flag);
}

std::vector<complex> noisy_samples(const TestFunction& f, int m, double noise, std::uint64_t seed) {
  const auto grid = equispaced_grid(m);
  std::vector<complex> samples(grid.nodes.size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = f(grid.nodes[i]);
  if (noise > 0.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-noise, noise);
    for (auto& s : samples) {
      const double re = u(rng);
      const double im = u(rng);
      s += complex(re, im);
    }
  }
  return samples;
}

}  // namespace

int SampleRule::m_for(int n, double epsilon, double gamma) const {
  if (kind == Kind::paper_scaling) return std::max({scaling_m_of_n(n, epsilon, gamma), n, 1});
  require(eta >= 1.0, "oversampling ratio eta must be >= 1");
  const int m = static_cast<int>(std::ceil(eta * n * (1.0 - 1e-12)));
  return std::max({m, n, 1});
}

double SampleRule::truncation(int n, double epsilon, double gamma) const {
  return kind == Kind::paper_scaling ? epsilon_prime(epsilon, n, gamma) : epsilon;
}

std::vector<SweepRecord> sweep_error_vs_n(const TestFunction& f, double gamma, double epsilon, SampleRule rule,
                                          std::span<const int> n_list, const SweepOptions& options) {
  require(gamma >= 1.0, "sweep: gamma must be >= 1");
  require(epsilon >= 0.0, "sweep: epsilon must be >= 0");
  require(options.fine_grid >= 2 && options.cond_grid >= 2, "sweep: grids need at least 2 points");
  for (int n : n_list) require(n >= 0, "sweep: n must be >= 0");

  std::vector<SweepRecord> records(n_list.size());
  parallel_for(n_list.size(), [&](std::size_t idx) {
    const int n = n_list[idx];
    SweepRecord& r = records[idx];
    r.function = f.name;
    r.n = n;
    r.gamma = gamma;
    r.epsilon = epsilon;
    try {
      r.m = rule.m_for(n, epsilon, gamma);
      r.eta = n > 0 ? static_cast<double>(r.m) / n : 0.0;
      if (rule.kind == SampleRule::Kind::oversampling) r.eta = rule.eta;
      const FrameApproximator op({gamma, n}, r.m, rule.truncation(n, epsilon, gamma));
      const auto fit = op.fit(noisy_samples(f, r.m, options.noise, options.seed + 1000003ULL * n));
      const auto err = errors_on_fine_grid(fit, f.eval, options.fine_grid);
      r.error_inf = err.error_inf;
      r.error_l2 = err.error_l2;
      r.cond_2 = op.cond_l2(options.cond_grid);
      r.cond_inf = op.cond_sup(options.cond_grid);
      r.flag = "ok";
    } catch (const NumericalFailure&) {
      fill_failure(r, "numerical_failure");
    }
  });
  sort_records(records);
  return records;
}

double Fig4Scheme::epsilon_for(int n) const {
  switch (kind) {
    case Kind::pls:
      return 0.0;
    case Kind::fixed:
      return epsilon;
    case Kind::varying:
      return std::max(std::pow(theta, -static_cast<double>(n)), epsilon);
  }
  return epsilon;
}

std::string Fig4Scheme::label() const {
  switch (kind) {
    case Kind::pls:
      return "pls";
    case Kind::fixed:
      return "pff";
    case Kind::varying: {
      std::ostringstream s;
      s << "pfv_theta" << theta;
      return s.str();
    }
  }
  return "unknown";
}

std::optional<int> smallest_m_for_condition(const FrameSpec& spec, double epsilon, double kappa_star, int m_max,
                                            const Eigen::MatrixXd& factor) {
  require(kappa_star > 1.0, "kappa_star must be > 1");
  const int m_min = std::max(spec.n, 1);
  require(m_max >= m_min, "m_max must be >= n");

  std::shared_ptr<const SvdFactors> none;
  auto meets = [&](int m) { return FrameApproximator(spec, m, epsilon, none).cond_l2(factor) <= kappa_star; };

  if (meets(m_min)) return m_min;
  if (!meets(m_max)) return std::nullopt;
  int lo = m_min, hi = m_max;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    (meets(mid) ? hi : lo) = mid;
  }
  // Spot-check the monotonicity assumption below the bracket.
  bool monotone = true;
  for (int k = 1; k <= 6 && monotone; ++k) {
    const int probe = m_min + static_cast<int>(std::floor((hi - 1 - m_min) * k / 7.0));
    if (probe > m_min && probe < hi && meets(probe)) monotone = false;
  }
  if (!monotone) {
    for (int m = m_min + 1; m < hi; ++m)
      if (meets(m)) return m;
  }
  return hi;
}

std::vector<SweepRecord> sweep_fig4(const TestFunction& f, const Fig4Scheme& scheme, std::span<const int> n_list,
                                    const Fig4Options& options) {
  require(options.kappa_star > 1.0, "sweep_fig4: kappa_star must be > 1");
  require(options.fine_grid >= 2 && options.cond_grid >= 2, "sweep_fig4: grids need at least 2 points");
  const double gamma = scheme.kind == Fig4Scheme::Kind::pls ? 1.0 : scheme.gamma;

  std::vector<SweepRecord> records(n_list.size());
  parallel_for(n_list.size(), [&](std::size_t idx) {
    const int n = n_list[idx];
    SweepRecord& r = records[idx];
    r.function = f.name;
    r.n = n;
    r.gamma = gamma;
    r.epsilon = scheme.epsilon_for(n);
    const FrameSpec spec{gamma, n};
    try {
      const Eigen::MatrixXd factor = fine_grid_factor(spec, options.fine_grid);
      const auto m = smallest_m_for_condition(spec, r.epsilon, options.kappa_star, options.m_max, factor);
      if (!m) {
        r.m = options.m_max;
        r.eta = n > 0 ? static_cast<double>(r.m) / n : 0.0;
        fill_failure(r, "unsatisfiable");
        return;
      }
      r.m = *m;
      r.eta = n > 0 ? static_cast<double>(r.m) / n : 0.0;
      const FrameApproximator op(spec, r.m, r.epsilon);
      const auto err = errors_on_fine_grid(op.fit(f.eval), f.eval, options.fine_grid);
      r.error_inf = err.error_inf;
      r.error_l2 = err.error_l2;
      r.cond_2 = op.cond_l2(factor);
      r.cond_inf = op.cond_sup(options.cond_grid);
      r.flag = "ok";
    } catch (const NumericalFailure&) {
      fill_failure(r, "numerical_failure");
    }
  });
  sort_records(records);
  return records;
}

void sort_records(std::vector<SweepRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::tie(a.function, a.gamma, a.epsilon, a.n, a.eta, a.m) <
           std::tie(b.function, b.gamma, b.epsilon, b.n, b.eta, b.m);
  });
}

std::vector<int> n_range(int first, int last, int step) {
  require(step >= 1, "n_range: step must be >= 1");
  std::vector<int> out;
  for (int n = first; n <= last; n += step) out.push_back(n);
  return out;
}

}  // namespace framex
