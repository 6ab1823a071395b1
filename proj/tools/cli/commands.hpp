#pragma once

// Subcommands of the qnsd tool.  Each writes its data section to `out`,
// diagnostics to `err`, and returns the process exit code.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cli/manifest.hpp"

namespace qnsd::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // property violation or non-convergence
  kExitUsage = 2,
  kExitNumerical = 3,
};

inline constexpr std::uint64_t kDefaultSeed = 42;

inline constexpr std::string_view kCheckNames[] = {
    "log_bound", "am_gm",              "young",          "holder",
    "cauchy_schwarz", "transpose_spectral", "generalized_cs"};

struct IneqOptions {
  std::string name = "all";
  std::uint64_t trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::size_t dim = 4;
  double tolerance = 1e-9;
  unsigned workers = 1;
};

struct DirectionOptions {
  std::size_t dim = 2;
  std::size_t samples = 100'000;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = 20;
  // Coverage tolerance; defaults to 5e-3 for dim <= 3, else 2e-2.
  std::optional<double> tolerance;
  unsigned workers = 1;
};

struct OptimizeOptions {
  std::string function = "rosenbrock";
  std::string method = "qn";
  std::string x0 = "-1.2,1";
  double tolerance = 1e-8;
  int max_iter = 500;
};

struct PlotOptions {
  double xmin = 0.01;
  double xmax = 4.0;
  std::size_t points = 400;
};

int cmd_ineq(const IneqOptions& opts, const RunManifest& manifest,
             std::ostream& out, std::ostream& err);
int cmd_direction(const DirectionOptions& opts, const RunManifest& manifest,
                  std::ostream& out, std::ostream& err);
int cmd_optimize(const OptimizeOptions& opts, const RunManifest& manifest,
                 std::ostream& out, std::ostream& err);
int cmd_plot_lemma1(const PlotOptions& opts, const RunManifest& manifest,
                    std::ostream& out, std::ostream& err);

// Parses "a,b,c" into reals; nullopt on any malformed entry.
std::optional<std::vector<double>> parse_reals(std::string_view text);

// Shortest round-trip decimal form, independent of locale.
std::string format_real(double v);

}  // namespace qnsd::cli
