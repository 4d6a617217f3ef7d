// Command-line front end: single fits, sweeps, condition numbers, extremal
// quantities, Markov checks, and the figure pipelines.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "framex/errors.hpp"
#include "framex/experiments.hpp"
#include "framex/extremal.hpp"
#include "framex/figures.hpp"
#include "framex/frame_approx.hpp"
#include "framex/records.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

std::vector<int> parse_n_range(const std::string& spec) {
  std::vector<int> parts;
  std::stringstream s(spec);
  std::string item;
  while (std::getline(s, item, ':')) {
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw framex::InvalidArgument("--n-range: bad integer '" + item + "' in '" + spec + "'");
    }
  }
  if (parts.size() == 2) parts.push_back(1);
  if (parts.size() != 3) throw framex::InvalidArgument("--n-range expects A:B or A:B:STEP, got '" + spec + "'");
  return framex::n_range(parts[0], parts[1], parts[2]);
}

std::vector<framex::complex> read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open samples file '" + path + "'");
  std::vector<framex::complex> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    if (!(row >> re)) throw framex::InvalidArgument(path + ": bad sample line '" + line + "'");
    row >> im;
    out.emplace_back(re, im);
  }
  return out;
}

void write_records(const std::vector<framex::SweepRecord>& records, const std::string& out,
                   const framex::CsvMetadata& meta = {}) {
  if (out.empty())
    framex::write_csv(std::cout, records, meta);
  else
    framex::emit_csv(records, out, meta);
}

struct SampleChoice {
  int m = 0;
  double eta = 0.0;
  std::string scaling;
};

framex::SampleRule rule_from(const SampleChoice& c, CLI::Option* m_opt, CLI::Option* eta_opt) {
  if (!c.scaling.empty()) {
    if (c.scaling != "paper") throw framex::InvalidArgument("--scaling accepts only 'paper'");
    return framex::SampleRule::paper_scaling();
  }
  if (eta_opt && eta_opt->count()) return framex::SampleRule::oversampling(c.eta);
  if (m_opt && m_opt->count()) return framex::SampleRule::oversampling(0.0);
  return framex::SampleRule::oversampling(2.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial frame approximation from equispaced samples"};
  app.require_subcommand(1);

  // approximate
  auto* approx = app.add_subcommand("approximate", "Fit one function and report errors and condition numbers");
  std::string function = "runge1";
  double omega = 10.0, gamma = 1.2, epsilon = 1e-14, noise = 0.0;
  int n = 20, grid = 50000, cond_grid = 50000;
  std::uint64_t seed = 1;
  SampleChoice choice;
  std::string out, samples_path;
  approx->add_option("--function", function, "Registry function name (osc uses --omega)");
  approx->add_option("--omega", omega, "Frequency for osc");
  approx->add_option("--gamma", gamma, "Extension parameter")->required();
  approx->add_option("--epsilon", epsilon, "Truncation threshold")->required();
  approx->add_option("--n", n, "Maximal degree")->required();
  auto* m_opt = approx->add_option("--m", choice.m, "Explicit sample parameter (m+1 points)");
  auto* eta_opt = approx->add_option("--eta", choice.eta, "Oversampling ratio m/n");
  auto* scaling_opt = approx->add_option("--scaling", choice.scaling, "'paper': m and threshold from n, eps, gamma");
  m_opt->excludes(eta_opt)->excludes(scaling_opt);
  eta_opt->excludes(scaling_opt);
  approx->add_option("--grid", grid, "Fine evaluation grid size");
  approx->add_option("--cond-grid", cond_grid, "Grid size for condition numbers");
  approx->add_option("--noise", noise, "Uniform sample noise amplitude");
  approx->add_option("--seed", seed, "Noise seed");
  approx->add_option("--samples", samples_path, "Tabulated samples (one 're[,im]' per line); prints coefficients");
  approx->add_option("--out", out, "Output CSV (default stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Error and conditioning versus n");
  std::string n_range_spec;
  SampleChoice sweep_choice;
  sweep->add_option("--function", function)->required();
  sweep->add_option("--omega", omega);
  sweep->add_option("--gamma", gamma)->required();
  sweep->add_option("--epsilon", epsilon)->required();
  auto* sweep_eta = sweep->add_option("--eta", sweep_choice.eta);
  auto* sweep_scaling = sweep->add_option("--scaling", sweep_choice.scaling);
  sweep_eta->excludes(sweep_scaling);
  sweep->add_option("--n-range", n_range_spec, "A:B:STEP")->required();
  sweep->add_option("--grid", grid);
  sweep->add_option("--cond-grid", cond_grid);
  sweep->add_option("--noise", noise);
  sweep->add_option("--seed", seed);
  sweep->add_option("--out", out);

  // condition
  auto* cond = app.add_subcommand("condition", "Condition numbers of the approximation operator");
  int m = 0;
  cond->add_option("--gamma", gamma)->required();
  cond->add_option("--epsilon", epsilon)->required();
  cond->add_option("--n", n)->required();
  cond->add_option("--m", m)->required();
  cond->add_option("--grid", grid);

  // extremal
  auto* extremal = app.add_subcommand("extremal", "Extremal polynomial quantities");
  extremal->require_subcommand(1);
  auto* bmn = extremal->add_subcommand("bmn", "Exact B(m,n) by vertex enumeration");
  int probe = 2001;
  bmn->add_option("--m", m)->required();
  bmn->add_option("--n", n)->required();
  bmn->add_option("--probe", probe);
  auto* cmn = extremal->add_subcommand("cmn", "Lower bound on C(m,n,gamma,epsilon)");
  framex::CmnSearchBudget budget;
  cmn->add_option("--m", m)->required();
  cmn->add_option("--n", n)->required();
  cmn->add_option("--gamma", gamma)->required();
  cmn->add_option("--epsilon", epsilon)->required();
  cmn->add_option("--restarts", budget.restarts);
  cmn->add_option("--seed", budget.seed);

  // markov-check
  auto* markov = app.add_subcommand("markov-check", "Pointwise Markov inequality on random polynomials");
  int k = 1, trials = 1000;
  double delta = 0.5;
  markov->add_option("--n", n)->required();
  markov->add_option("--k", k)->required();
  markov->add_option("--delta", delta)->required();
  markov->add_option("--trials", trials)->required();
  markov->add_option("--seed", seed);

  // figure
  auto* figure = app.add_subcommand("figure", "Write the CSV series behind one figure");
  std::string figure_id, scale = "desk", out_dir;
  framex::FigureOptions fig_options;
  int n_max = 0;
  figure->add_option("figure", figure_id, "fig1 | fig2 | fig3 | fig4")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));
  figure->add_option("--scale", scale)->check(CLI::IsMember({"desk", "paper"}));
  figure->add_option("--out-dir", out_dir)->required();
  figure->add_option("--grid", fig_options.fine_grid);
  figure->add_option("--cond-grid", fig_options.cond_grid);
  auto* n_max_opt = figure->add_option("--n-max", n_max, "Truncate n ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (approx->parsed()) {
      if (!samples_path.empty()) {
        const auto samples = read_samples(samples_path);
        if (samples.size() < 2) throw framex::InvalidArgument("--samples needs at least 2 values");
        const int sm = static_cast<int>(samples.size()) - 1;
        const auto fit = framex::fit({gamma, n}, sm, epsilon, samples);
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!out.empty()) {
          file.open(out);
          if (!file) throw std::runtime_error("cannot open '" + out + "' for writing");
          os = &file;
        }
        *os << "# gamma=" << framex::format_double(gamma) << "\n# m=" << sm << "\nindex,re,im\n";
        for (int i = 0; i <= n; ++i)
          *os << i << ',' << framex::format_double(fit.coeffs[i].real()) << ','
              << framex::format_double(fit.coeffs[i].imag()) << '\n';
        return 0;
      }
      const auto f = framex::find_function(function, omega);
      auto rule = rule_from(choice, m_opt, eta_opt);
      framex::SweepOptions options{grid, cond_grid, noise, seed};
      std::vector<framex::SweepRecord> records;
      if (m_opt->count()) {
        framex::SweepRecord r;
        r.function = f.name;
        r.n = n;
        r.m = choice.m;
        r.gamma = gamma;
        r.epsilon = epsilon;
        r.eta = n > 0 ? static_cast<double>(choice.m) / n : 0.0;
        if (noise > 0.0) throw framex::InvalidArgument("--noise needs --eta or --scaling");
        const framex::FrameApproximator op({gamma, n}, choice.m, epsilon);
        const auto fit = op.fit(f.eval);
        const auto err = framex::errors_on_fine_grid(fit, f.eval, grid);
        r.error_inf = err.error_inf;
        r.error_l2 = err.error_l2;
        r.cond_2 = op.cond_l2(cond_grid);
        r.cond_inf = op.cond_sup(cond_grid);
        records.push_back(r);
      } else {
        records = framex::sweep_error_vs_n(f, gamma, epsilon, rule, std::vector<int>{n}, options);
      }
      write_records(records, out);
      return 0;
    }
    if (sweep->parsed()) {
      const auto f = framex::find_function(function, omega);
      auto rule = rule_from(sweep_choice, nullptr, sweep_eta);
      const auto n_list = parse_n_range(n_range_spec);
      framex::SweepOptions options{grid, cond_grid, noise, seed};
      const auto records = framex::sweep_error_vs_n(f, gamma, epsilon, rule, n_list, options);
      framex::CsvMetadata meta{{"function", f.name}, {"theta", framex::format_double(f.theta_star)}};
      if (f.omega) meta.emplace_back("omega", framex::format_double(*f.omega));
      write_records(records, out, meta);
      return 0;
    }
    if (cond->parsed()) {
      const auto c = framex::condition_numbers({gamma, n}, m, epsilon, grid);
      std::cout << "cond_2,cond_inf\n"
                << framex::format_double(c.cond_2) << ',' << framex::format_double(c.cond_inf) << '\n';
      return 0;
    }
    if (bmn->parsed() || cmn->parsed()) {
      const auto r = bmn->parsed() ? framex::bmn_oracle(m, n, probe) : framex::cmn_lower_bound(m, n, gamma, epsilon, budget);
      std::cout << "value," << framex::format_double(r.value) << "\nwitness_x," << framex::format_double(r.witness_x)
                << "\nwitness_coeffs";
      for (double c : r.witness_coeffs) std::cout << ',' << framex::format_double(c);
      std::cout << '\n';
      return 0;
    }
    if (markov->parsed()) {
      const auto r = framex::markov_check(n, k, delta, trials, seed);
      std::cout << "trials," << r.trials << "\nmarkov_violations," << r.markov_violations << "\nsd_violations,"
                << r.sd_violations << "\nd_bound_violations," << r.d_bound_violations << "\nmax_ratio_markov,"
                << framex::format_double(r.max_ratio_markov) << "\nmax_ratio_sd,"
                << framex::format_double(r.max_ratio_sd) << '\n';
      return r.passed() ? 0 : 1;
    }
    if (figure->parsed()) {
      fig_options.scale = scale == "paper" ? framex::FigureScale::paper : framex::FigureScale::desk;
      if (n_max_opt->count()) fig_options.n_max = n_max;
      for (const auto& path : framex::run_figure(figure_id, out_dir, fig_options)) std::cout << path.string() << '\n';
      return 0;
    }
  } catch (const framex::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const framex::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
