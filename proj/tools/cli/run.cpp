#include "cli/run.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"

namespace qnsd::cli {

namespace {

struct SharedFlags {
  std::string out_path;
};

void add_output(CLI::App* cmd, SharedFlags& shared) {
  cmd->add_option("--out", shared.out_path, "Write the data section to this file");
}

RunManifest base_manifest(std::string subcommand, std::uint64_t seed) {
  RunManifest m;
  m.subcommand = std::move(subcommand);
  m.seed = seed;
  m.version = QNSD_VERSION;
  m.started_at = utc_timestamp();
  return m;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-Newton / ellipsoid-norm steepest descent verification tool", "qnsd"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QNSD_VERSION);

  SharedFlags shared;

  IneqOptions ineq;
  auto* ineq_cmd = app.add_subcommand("ineq", "Fuzz one inequality check, or all of them");
  ineq_cmd->add_option("--name", ineq.name, "log_bound|am_gm|young|holder|cauchy_schwarz|"
                                            "transpose_spectral|generalized_cs|all")
      ->capture_default_str();
  ineq_cmd->add_option("--trials", ineq.trials)->capture_default_str();
  ineq_cmd->add_option("--seed", ineq.seed)->capture_default_str();
  ineq_cmd->add_option("--dim", ineq.dim)->capture_default_str();
  ineq_cmd->add_option("--tolerance", ineq.tolerance, "Relative inequality slack")
      ->capture_default_str();
  ineq_cmd->add_option("--workers", ineq.workers)->capture_default_str();
  add_output(ineq_cmd, shared);

  DirectionOptions dir;
  double dir_tolerance = 0.0;
  auto* dir_cmd = app.add_subcommand("direction", "Closed-form direction vs sampling oracle");
  dir_cmd->add_option("--dim", dir.dim)->capture_default_str();
  dir_cmd->add_option("--samples", dir.samples)->capture_default_str();
  dir_cmd->add_option("--seed", dir.seed)->capture_default_str();
  dir_cmd->add_option("--trials", dir.trials)->capture_default_str();
  auto* dir_tol = dir_cmd->add_option("--tolerance", dir_tolerance,
                                      "Relative coverage tolerance (default by dim)");
  dir_cmd->add_option("--workers", dir.workers)->capture_default_str();
  add_output(dir_cmd, shared);

  OptimizeOptions opt;
  std::uint64_t opt_seed = kDefaultSeed;
  auto* opt_cmd = app.add_subcommand("optimize", "Run quasi-Newton or steepest descent");
  opt_cmd->add_option("--function", opt.function, "rosenbrock|sphere|quadratic")
      ->capture_default_str();
  opt_cmd->add_option("--method", opt.method, "qn|sd")->capture_default_str();
  opt_cmd->add_option("--x0", opt.x0, "Comma-separated start point")->capture_default_str();
  opt_cmd->add_option("--tolerance,--tol", opt.tolerance, "Gradient-norm tolerance")
      ->capture_default_str();
  opt_cmd->add_option("--max-iter", opt.max_iter)->capture_default_str();
  opt_cmd->add_option("--seed", opt_seed, "Recorded in the manifest; the run is deterministic");
  add_output(opt_cmd, shared);

  PlotOptions plot;
  auto* plot_cmd = app.add_subcommand("plot-lemma1", "TSV of x, x-1 and ln(x)");
  plot_cmd->add_option("--xmin", plot.xmin)->capture_default_str();
  plot_cmd->add_option("--xmax", plot.xmax)->capture_default_str();
  plot_cmd->add_option("--points", plot.points)->capture_default_str();
  add_output(plot_cmd, shared);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!shared.out_path.empty()) {
    file.open(shared.out_path, std::ios::binary);
    if (!file) {
      err << "cannot open --out path '" << shared.out_path << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  if (ineq_cmd->parsed()) {
    RunManifest m = base_manifest("ineq", ineq.seed);
    m.parameters = {{"name", ineq.name},
                    {"trials", std::to_string(ineq.trials)},
                    {"seed", std::to_string(ineq.seed)},
                    {"dim", std::to_string(ineq.dim)},
                    {"tolerance", format_real(ineq.tolerance)}};
    return cmd_ineq(ineq, m, *sink, err);
  }
  if (dir_cmd->parsed()) {
    if (dir_tol->count() > 0) dir.tolerance = dir_tolerance;
    RunManifest m = base_manifest("direction", dir.seed);
    m.parameters = {{"dim", std::to_string(dir.dim)},
                    {"samples", std::to_string(dir.samples)},
                    {"seed", std::to_string(dir.seed)},
                    {"trials", std::to_string(dir.trials)}};
    if (dir.tolerance) m.parameters.emplace_back("tolerance", format_real(*dir.tolerance));
    return cmd_direction(dir, m, *sink, err);
  }
  if (opt_cmd->parsed()) {
    RunManifest m = base_manifest("optimize", opt_seed);
    m.parameters = {{"function", opt.function},
                    {"method", opt.method},
                    {"x0", opt.x0},
                    {"tolerance", format_real(opt.tolerance)},
                    {"max-iter", std::to_string(opt.max_iter)},
                    {"seed", std::to_string(opt_seed)}};
    return cmd_optimize(opt, m, *sink, err);
  }
  RunManifest m = base_manifest("plot-lemma1", kDefaultSeed);
  m.parameters = {{"xmin", format_real(plot.xmin)},
                  {"xmax", format_real(plot.xmax)},
                  {"points", std::to_string(plot.points)}};
  return cmd_plot_lemma1(plot, m, *sink, err);
}

}  // namespace qnsd::cli
