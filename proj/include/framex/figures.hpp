#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace framex {

enum class FigureScale { desk, paper };

struct FigureOptions {
  FigureScale scale = FigureScale::desk;
  int fine_grid = 50000;
  int cond_grid = 5000;        ///< cond_inf grid; figures plot errors, not cond_inf
  std::optional<int> n_max;    ///< truncate every n range (quick runs)
  std::optional<int> n_step;   ///< override the n step
};

/// Runs the sweeps behind one figure (fig1 .. fig4) and writes one CSV per
/// panel series into out_dir. Returns the written paths in creation order.
std::vector<std::filesystem::path> run_figure(std::string_view figure, const std::filesystem::path& out_dir,
                                              const FigureOptions& options = {});

}  // namespace framex
