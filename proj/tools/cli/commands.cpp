#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <ostream>
#include <thread>

#include "qnsd/descent.hpp"
#include "qnsd/inequalities.hpp"
#include "qnsd/optimizer.hpp"
#include "qnsd/random.hpp"

namespace qnsd::cli {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::optional<std::vector<double>> parse_reals(std::string_view text) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    std::string_view field = text.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size() ||
        !std::isfinite(v)) {
      return std::nullopt;
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// ineq

struct TrialOutcome {
  InequalityReport report;
  bool failed = false;  // numerical failure, e.g. NoConvergence
  std::string error;
};

TrialOutcome run_check(std::size_t check, std::uint64_t trial, const IneqOptions& opts) {
  Rng rng(derive_seed(opts.seed, check, trial));
  const std::size_t n = opts.dim;
  TrialOutcome outcome;
  try {
    switch (check) {
      case 0:
        outcome.report = check_log_bound(gen::log_uniform(rng));
        break;
      case 1: {
        const Vector a = gen::positive_vector(rng, n);
        outcome.report = check_weighted_am_gm(a, WeightVector(gen::simplex_weights(rng, n)));
        break;
      }
      case 2: {
        const double x = gen::log_uniform(rng);
        const double y = gen::log_uniform(rng);
        outcome.report = check_young(x, y, gen::exponent(rng));
        break;
      }
      case 3: {
        const Vector x = gen::signed_vector(rng, n);
        const Vector y = gen::signed_vector(rng, n);
        outcome.report = check_holder(x, y, gen::exponent(rng));
        break;
      }
      case 4: {
        const Vector x = gen::signed_vector(rng, n);
        const Vector y = gen::signed_vector(rng, n);
        outcome.report = check_cauchy_schwarz(x, y);
        break;
      }
      case 5: {
        std::uniform_int_distribution<std::size_t> size(1, n);
        const std::size_t rows = size(rng);
        const std::size_t cols = size(rng);
        outcome.report = check_transpose_spectral(gen::uniform_matrix(rng, rows, cols));
        break;
      }
      case 6: {
        const SpdMatrix a = gen::spd_matrix(rng, n);
        const Vector x = gen::signed_vector(rng, n);
        const Vector y = gen::signed_vector(rng, n);
        outcome.report = check_generalized_cs(a, x, y);
        break;
      }
      default:
        break;
    }
  } catch (const Error& e) {
    outcome.failed = true;
    outcome.error = e.what();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    outcome.report = InequalityReport{nan, nan, nan, false, false, false};
    return outcome;
  }
  // --tolerance overrides the one-sided slack; the transpose identity keeps
  // its own two-sided test.
  if (check != 5) {
    InequalityReport& r = outcome.report;
    r.holds = r.gap >= -opts.tolerance * std::max(1.0, std::abs(r.rhs));
  }
  return outcome;
}

// Fills results[i] for trial i.  Any worker count yields the same vector.
std::vector<TrialOutcome> run_campaign(std::size_t check, const IneqOptions& opts) {
  std::vector<TrialOutcome> results(opts.trials);
  const unsigned workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(opts.workers, 1, opts.trials));
  auto work = [&](unsigned w) {
    for (std::uint64_t t = w; t < opts.trials; t += workers) {
      results[t] = run_check(check, t, opts);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  return results;
}

// ---------------------------------------------------------------------------
// optimize

std::optional<Objective> objective_for(const std::string& function, std::size_t n) {
  if (function == "rosenbrock") return make_rosenbrock();
  if (function == "sphere") return make_sphere(n);
  if (function == "quadratic") return make_default_quadratic(n);
  return std::nullopt;
}

void write_trace(const OptTrace& trace, std::ostream& out) {
  out << "iter,f,grad_norm,alpha,secant_residual\n";
  for (const auto& r : trace.records) {
    out << r.k << ',' << format_real(r.f) << ',' << format_real(r.grad_norm) << ',';
    if (r.alpha) out << format_real(*r.alpha);
    out << ',';
    if (r.secant_residual) out << format_real(*r.secant_residual);
    out << '\n';
  }
  const auto& last = trace.final_record();
  out << "# termination: " << to_string(trace.termination)
      << " iterations=" << trace.iterations()
      << " final_f=" << format_real(last.f)
      << " final_grad_norm=" << format_real(last.grad_norm) << '\n';
}

}  // namespace

int cmd_ineq(const IneqOptions& opts, const RunManifest& manifest, std::ostream& out,
             std::ostream& err) {
  std::vector<std::size_t> checks;
  for (std::size_t i = 0; i < std::size(kCheckNames); ++i) {
    if (opts.name == "all" || opts.name == kCheckNames[i]) checks.push_back(i);
  }
  if (checks.empty()) {
    err << "ineq: unknown check '" << opts.name << "'\n";
    return kExitUsage;
  }
  if (opts.trials < 1 || opts.dim < 1 || !(opts.tolerance >= 0.0)) {
    err << "ineq: --trials and --dim must be >= 1, --tolerance >= 0\n";
    return kExitUsage;
  }

  manifest.write(out);
  out << "check,trial_index,lhs,rhs,gap,holds,equality_predicted,equality_observed\n";
  std::uint64_t violations = 0;
  std::uint64_t failures = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t check : checks) {
    const auto results = run_campaign(check, opts);
    for (std::uint64_t t = 0; t < results.size(); ++t) {
      const auto& [r, failed, error] = results[t];
      if (failed) {
        ++failures;
        err << "ineq: " << kCheckNames[check] << " trial " << t << ": " << error << '\n';
      } else if (!r.holds) {
        ++violations;
      }
      if (!failed) min_gap = std::min(min_gap, r.gap);
      out << kCheckNames[check] << ',' << t << ',' << format_real(r.lhs) << ','
          << format_real(r.rhs) << ',' << format_real(r.gap) << ',' << bool_str(r.holds)
          << ',' << bool_str(r.equality_predicted) << ','
          << bool_str(r.equality_observed) << '\n';
    }
  }
  out << "# summary: checks=" << checks.size() << " trials=" << opts.trials
      << " min_gap=" << format_real(min_gap) << " violations=" << violations
      << " failures=" << failures << '\n';
  if (violations > 0) return kExitViolation;
  return failures > 0 ? kExitNumerical : kExitOk;
}

int cmd_direction(const DirectionOptions& opts, const RunManifest& manifest,
                  std::ostream& out, std::ostream& err) {
  if (opts.dim < 1 || opts.dim > 6) {
    err << "direction: --dim must lie in [1, 6]; the oracle is not calibrated beyond\n";
    return kExitUsage;
  }
  if (opts.samples < 1000 || opts.trials < 1) {
    err << "direction: --samples must be >= 1000 and --trials >= 1\n";
    return kExitUsage;
  }
  const double coverage_tol = opts.tolerance.value_or(opts.dim <= 3 ? 5e-3 : 2e-2);

  manifest.write(out);
  out << "trial,dim,closed_form,oracle,rel_gap,feasibility_residual,bound_ok,coverage_ok\n";
  std::uint64_t bound_violations = 0;
  std::uint64_t coverage_misses = 0;
  try {
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
      Rng rng(derive_seed(opts.seed, 100, t));
      const SpdMatrix b = gen::spd_matrix(rng, opts.dim, gen::kOracleSpdShift);
      const Vector g = gen::normal_vector(rng, opts.dim);
      const DirectionResult closed = steepest_direction(g, b);
      const DirectionResult oracle = brute_force_min(
          g, b, {.samples = opts.samples, .seed = derive_seed(opts.seed, 101, t),
                 .workers = opts.workers});
      const double scale = std::abs(closed.value);
      const double rel_gap = (oracle.value - closed.value) / scale;
      const double feasibility = std::abs(ellipsoid_norm(b, closed.direction) - 1.0);
      const bool bound_ok = oracle.value >= closed.value - 1e-12 * scale;
      const bool coverage_ok = rel_gap <= coverage_tol && feasibility <= 1e-10;
      bound_violations += bound_ok ? 0 : 1;
      coverage_misses += coverage_ok ? 0 : 1;
      out << t << ',' << opts.dim << ',' << format_real(closed.value) << ','
          << format_real(oracle.value) << ',' << format_real(rel_gap) << ','
          << format_real(feasibility) << ',' << bool_str(bound_ok) << ','
          << bool_str(coverage_ok) << '\n';
    }
  } catch (const Error& e) {
    err << "direction: " << e.what() << '\n';
    return kExitNumerical;
  }
  out << "# summary: trials=" << opts.trials << " coverage_tolerance="
      << format_real(coverage_tol) << " bound_violations=" << bound_violations
      << " coverage_misses=" << coverage_misses << '\n';
  return bound_violations + coverage_misses == 0 ? kExitOk : kExitViolation;
}

int cmd_optimize(const OptimizeOptions& opts, const RunManifest& manifest,
                 std::ostream& out, std::ostream& err) {
  const auto x0 = parse_reals(opts.x0);
  if (!x0) {
    err << "optimize: cannot parse --x0 '" << opts.x0 << "'\n";
    return kExitUsage;
  }
  const auto obj = objective_for(opts.function, x0->size());
  if (!obj) {
    err << "optimize: unknown function '" << opts.function << "'\n";
    return kExitUsage;
  }
  if (obj->dimension != x0->size()) {
    err << "optimize: " << obj->name << " needs " << obj->dimension << " coordinates\n";
    return kExitUsage;
  }
  if (opts.method != "qn" && opts.method != "sd") {
    err << "optimize: --method must be qn or sd\n";
    return kExitUsage;
  }
  OptimizerConfig cfg;
  cfg.grad_tol = opts.tolerance;
  cfg.max_iter = opts.max_iter;
  try {
    cfg.validate();
  } catch (const Error& e) {
    err << "optimize: " << e.what() << '\n';
    return kExitUsage;
  }

  const Method method = opts.method == "qn" ? Method::kQuasiNewton : Method::kSteepestDescent;
  manifest.write(out);
  try {
    const OptTrace trace = minimize(*obj, Vector(*x0), method, cfg);
    write_trace(trace, out);
    return trace.termination == Termination::kGradientTolerance ? kExitOk : kExitViolation;
  } catch (const LineSearchError& e) {
    write_trace(e.trace(), out);
    err << "optimize: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "optimize: " << e.what() << '\n';
    return kExitNumerical;
  }
}

int cmd_plot_lemma1(const PlotOptions& opts, const RunManifest& manifest,
                    std::ostream& out, std::ostream& err) {
  if (!(opts.xmin > 0.0) || !(opts.xmax > opts.xmin) || !std::isfinite(opts.xmax) ||
      opts.points < 2) {
    err << "plot-lemma1: need 0 < xmin < xmax and points >= 2\n";
    return kExitUsage;
  }
  manifest.write(out);
  out << "# x\tx-1\tln(x)\n";
  const double last = static_cast<double>(opts.points - 1);
  for (std::size_t i = 0; i < opts.points; ++i) {
    // Convex combination of the endpoints hits both ends exactly.
    const double fi = static_cast<double>(i);
    const double x = (opts.xmin * (last - fi) + opts.xmax * fi) / last;
    out << format_real(x) << '\t' << format_real(x - 1.0) << '\t'
        << format_real(std::log(x)) << '\n';
  }
  return kExitOk;
}

}  // namespace qnsd::cli
