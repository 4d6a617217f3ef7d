#include "framex/figures.hpp"

#include <cmath>
#include <sstream>

#include "framex/errors.hpp"
#include "framex/experiments.hpp"
#include "framex/records.hpp"

namespace framex {

namespace {

std::string compact(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::vector<int> ns(int first, int last, int step, const FigureOptions& o) {
  if (o.n_max) last = std::min(last, *o.n_max);
  if (o.n_step) step = *o.n_step;
  return n_range(first, last, step);
}

SweepOptions sweep_options(const FigureOptions& o) {
  SweepOptions s;
  s.fine_grid = o.fine_grid;
  s.cond_grid = o.cond_grid;
  return s;
}

std::vector<std::filesystem::path> fig1(const std::filesystem::path& dir, const FigureOptions& o) {
  const auto f = find_function("runge1");
  const std::vector<double> etas{2.0, 4.0, 8.0};
  const auto n_list = o.scale == FigureScale::desk ? ns(10, 150, 10, o) : ns(5, 200, 5, o);
  std::vector<std::filesystem::path> out;
  for (double eps : {1e-14, 1e-10, 1e-6}) {
    for (double gamma : {1.2, 1.4, 1.8}) {
      std::vector<SweepRecord> rows;
      for (double eta : etas) {
        auto part = sweep_error_vs_n(f, gamma, eps, SampleRule::oversampling(eta), n_list, sweep_options(o));
        rows.insert(rows.end(), part.begin(), part.end());
      }
      CsvMetadata meta{{"figure", "fig1"},
                       {"function", f.name},
                       {"theta", format_double(f.theta_star)},
                       {"gamma", format_double(gamma)},
                       {"epsilon", format_double(eps)},
                       {"tau", format_double(tau_of_gamma(gamma))},
                       {"eta_values", "2;4;8"},
                       {"note", "eta values and n range are artifact defaults; the source figure does not state them"}};
      if (f.theta_star < tau_of_gamma(gamma))
        meta.emplace_back("breakpoint", format_double(breakpoint(eps, f.theta_star, gamma)));
      auto path = dir / ("fig1_gamma" + compact(gamma) + "_eps" + compact(eps) + ".csv");
      emit_csv(rows, path, meta);
      out.push_back(path);
    }
  }
  return out;
}

std::vector<std::filesystem::path> fig2(const std::filesystem::path& dir, const FigureOptions& o) {
  const auto n_list = o.scale == FigureScale::desk ? ns(10, 150, 10, o) : ns(5, 300, 5, o);
  const std::vector<double> epsilons{1e-6, 1e-10, 1e-14};
  std::vector<std::filesystem::path> out;
  for (const char* name : {"fig2_f1", "fig2_f2", "fig2_f3"}) {
    const auto f = find_function(name);
    for (double gamma : {1.25, 1.5, 2.0}) {
      std::vector<SweepRecord> rows;
      CsvMetadata meta{{"figure", "fig2"},
                       {"function", f.name},
                       {"theta", format_double(f.theta_star)},
                       {"gamma", format_double(gamma)},
                       {"tau", format_double(tau_of_gamma(gamma))},
                       {"eta_values", "4"}};
      for (double eps : epsilons) {
        auto part = sweep_error_vs_n(f, gamma, eps, SampleRule::oversampling(4.0), n_list, sweep_options(o));
        rows.insert(rows.end(), part.begin(), part.end());
        if (f.theta_star < tau_of_gamma(gamma))
          meta.emplace_back("breakpoint_eps" + compact(eps), format_double(breakpoint(eps, f.theta_star, gamma)));
      }
      auto path = dir / ("fig2_" + f.name.substr(5) + "_gamma" + compact(gamma) + ".csv");
      emit_csv(rows, path, meta);
      out.push_back(path);
    }
  }
  return out;
}

std::vector<std::filesystem::path> fig3(const std::filesystem::path& dir, const FigureOptions& o) {
  const std::vector<double> omegas =
      o.scale == FigureScale::desk ? std::vector<double>{10.0, 20.0} : std::vector<double>{40.0, 60.0, 80.0};
  const std::vector<double> epsilons{1e-6, 1e-10, 1e-14};
  std::vector<std::filesystem::path> out;
  for (double omega : omegas) {
    const auto f = oscillatory(omega);
    for (double gamma : {1.25, 1.5, 2.0}) {
      const double n0 = resolution_point(omega, gamma);
      const int last = std::min(o.scale == FigureScale::desk ? 300 : 1000, static_cast<int>(std::ceil(1.6 * n0)));
      const auto n_list = o.scale == FigureScale::desk ? ns(5, last, 5, o) : ns(10, last, 10, o);
      std::vector<SweepRecord> rows;
      for (double eps : epsilons) {
        auto part = sweep_error_vs_n(f, gamma, eps, SampleRule::oversampling(4.0), n_list, sweep_options(o));
        rows.insert(rows.end(), part.begin(), part.end());
      }
      CsvMetadata meta{{"figure", "fig3"},
                       {"function", f.name},
                       {"omega", format_double(omega)},
                       {"gamma", format_double(gamma)},
                       {"n0", format_double(n0)},
                       {"eta_values", "4"}};
      auto path = dir / ("fig3_omega" + compact(omega) + "_gamma" + compact(gamma) + ".csv");
      emit_csv(rows, path, meta);
      out.push_back(path);
    }
  }
  return out;
}

std::vector<std::filesystem::path> fig4(const std::filesystem::path& dir, const FigureOptions& o) {
  // The desk run keeps n <= 60, too small to resolve exp(40 pi i x); it uses
  // omega = 10 for the third function instead.
  const double omega = o.scale == FigureScale::desk ? 10.0 : 40.0;
  const auto n_list = o.scale == FigureScale::desk ? ns(5, 60, 5, o) : ns(5, 150, 5, o);
  std::vector<TestFunction> functions{find_function("fig4_f1"), find_function("fig4_f2"), oscillatory(omega)};
  std::vector<Fig4Scheme> schemes{Fig4Scheme::pls(), Fig4Scheme::fixed(1.25, 1e-14)};
  for (double theta : {1.1, 1.3, 2.0}) schemes.push_back(Fig4Scheme::varying(1.25, theta));

  Fig4Options options;
  options.fine_grid = o.fine_grid;
  options.cond_grid = o.cond_grid;

  std::vector<std::filesystem::path> out;
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const auto& f = functions[i];
    for (const auto& scheme : schemes) {
      const auto rows = sweep_fig4(f, scheme, n_list, options);
      CsvMetadata meta{{"figure", "fig4"},
                       {"function", f.name},
                       {"theta_star", format_double(f.theta_star)},
                       {"scheme", scheme.label()},
                       {"kappa_star", format_double(options.kappa_star)}};
      if (f.omega) meta.emplace_back("omega", format_double(*f.omega));
      if (scheme.kind == Fig4Scheme::Kind::varying) {
        meta.emplace_back("theta", format_double(scheme.theta));
        meta.emplace_back("epsilon_floor", format_double(scheme.epsilon));
      }
      auto path = dir / ("fig4_f" + std::to_string(i + 1) + "_" + scheme.label() + ".csv");
      emit_csv(rows, path, meta);
      out.push_back(path);
    }
  }
  return out;
}

}  // namespace

std::vector<std::filesystem::path> run_figure(std::string_view figure, const std::filesystem::path& out_dir,
                                              const FigureOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create directory '" + out_dir.string() + "': " + ec.message());
  if (figure == "fig1") return fig1(out_dir, options);
  if (figure == "fig2") return fig2(out_dir, options);
  if (figure == "fig3") return fig3(out_dir, options);
  if (figure == "fig4") return fig4(out_dir, options);
  throw InvalidArgument("unknown figure '" + std::string(figure) + "' (expected fig1, fig2, fig3 or fig4)");
}

}  // namespace framex
