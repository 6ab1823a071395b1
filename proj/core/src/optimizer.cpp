#include "qnsd/optimizer.hpp"

#include <cmath>
#include <string>

namespace qnsd {

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::kQuasiNewton: return "quasi_newton";
    case Method::kSteepestDescent: return "steepest_descent";
  }
  return "unknown";
}

std::string_view to_string(Termination termination) noexcept {
  switch (termination) {
    case Termination::kGradientTolerance: return "gradient_tolerance";
    case Termination::kMaxIterations: return "max_iterations";
    case Termination::kLineSearchFailed: return "line_search_failed";
  }
  return "unknown";
}

void OptimizerConfig::validate() const {
  auto fail = [](const char* what) { throw Error(ErrorCode::kInvalidArgument, what); };
  if (!(grad_tol > 0.0)) fail("grad_tol must be positive");
  if (max_iter < 1) fail("max_iter must be positive");
  if (!(armijo_c > 0.0 && armijo_c < 1.0)) fail("armijo_c must lie in (0, 1)");
  if (!(backtrack_rho > 0.0 && backtrack_rho < 1.0)) fail("backtrack_rho must lie in (0, 1)");
  if (max_backtracks < 1) fail("max_backtracks must be positive");
  if (!(curvature_skip_tol > 0.0)) fail("curvature_skip_tol must be positive");
}

int OptTrace::iterations() const noexcept {
  int accepted = 0;
  for (const auto& r : records) accepted += r.alpha.has_value() ? 1 : 0;
  return accepted;
}

SpdMatrix bfgs_update(const SpdMatrix& b, const Vector& s, const Vector& y,
                      double curvature_skip_tol) {
  const std::size_t n = b.dimension();
  if (s.size() != n || y.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "bfgs_update: s, y must match B");
  }
  const double sy = dot(s, y);
  if (!(sy > curvature_skip_tol * norm2(s) * norm2(y))) {
    throw Error(ErrorCode::kCurvatureTooSmall,
                "s^T y = " + std::to_string(sy) + " fails the curvature test");
  }
  const Vector bs = b.matrix() * s;
  const double sbs = dot(s, bs);

  std::vector<double> next(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = b.matrix()(i, j) - bs[i] * bs[j] / sbs + y[i] * y[j] / sy;
      next[i * n + j] = v;
      next[j * n + i] = v;
    }
  }
  return SpdMatrix(Matrix(n, n, std::move(next)));
}

double backtracking_line_search(const Objective& obj, const Vector& x,
                                const Vector& d, const Vector& g,
                                const OptimizerConfig& cfg) {
  const double slope = dot(g, d);
  if (!(slope < 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "line search needs a descent direction, g^T d = " + std::to_string(slope));
  }
  const double f0 = obj.evaluate(x);
  double alpha = 1.0;
  for (int i = 0; i <= cfg.max_backtracks; ++i) {
    std::vector<double> trial(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) trial[j] = x[j] + alpha * d[j];
    bool finite = true;
    for (double t : trial) finite = finite && std::isfinite(t);
    if (finite) {
      const double f = obj.evaluate(Vector(std::move(trial)));
      if (std::isfinite(f) && f <= f0 + cfg.armijo_c * alpha * slope) return alpha;
    }
    alpha *= cfg.backtrack_rho;
  }
  throw Error(ErrorCode::kLineSearchFailed,
              "no Armijo step after " + std::to_string(cfg.max_backtracks) + " reductions");
}

OptTrace minimize(const Objective& obj, const Vector& x0, Method method,
                  const OptimizerConfig& cfg, const IterationObserver& observer) {
  cfg.validate();
  if (x0.size() != obj.dimension) {
    throw Error(ErrorCode::kDimensionMismatch,
                obj.name + " expects dimension " + std::to_string(obj.dimension));
  }
  const bool quasi_newton = method == Method::kQuasiNewton;

  OptTrace trace;
  trace.method = method;
  SpdMatrix b = SpdMatrix::identity(x0.size());
  Vector x = x0;
  double f = obj.evaluate(x);
  Vector g = obj.gradient(x);

  for (int k = 0;; ++k) {
    IterationRecord rec{.k = k, .x = x, .f = f, .grad_norm = norm2(g),
                        .alpha = {}, .secant_residual = {}, .update_skipped = false};
    if (rec.grad_norm <= cfg.grad_tol || k == cfg.max_iter) {
      trace.termination = rec.grad_norm <= cfg.grad_tol ? Termination::kGradientTolerance
                                                        : Termination::kMaxIterations;
      trace.records.push_back(std::move(rec));
      return trace;
    }

    const Vector d = quasi_newton ? -solve_spd(b.factor(), g) : -g;
    if (observer) observer(IterationView{k, x, g, b, d});

    double alpha = 0.0;
    try {
      alpha = backtracking_line_search(obj, x, d, g, cfg);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kLineSearchFailed &&
          e.code() != ErrorCode::kInvalidArgument) {
        throw;
      }
      trace.records.push_back(std::move(rec));
      trace.termination = Termination::kLineSearchFailed;
      throw LineSearchError(e.what(), std::move(trace));
    }

    Vector x_next = x + alpha * d;
    Vector g_next = obj.gradient(x_next);
    rec.alpha = alpha;
    if (quasi_newton) {
      const Vector s = x_next - x;
      const Vector y = g_next - g;
      try {
        b = bfgs_update(b, s, y, cfg.curvature_skip_tol);
        rec.secant_residual = norm2(b.matrix() * s - y);
      } catch (const Error& e) {
        // Skip the update and keep B; rounding can also make B' fail the
        // positive-definiteness test.
        if (e.code() != ErrorCode::kCurvatureTooSmall &&
            e.code() != ErrorCode::kNotPositiveDefinite) {
          throw;
        }
        rec.update_skipped = true;
      }
    }
    trace.records.push_back(std::move(rec));
    x = std::move(x_next);
    g = std::move(g_next);
    f = obj.evaluate(x);
  }
}

Vector finite_diff_grad(const Objective& obj, const Vector& x, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "step h must be positive");
  std::vector<double> grad(x.size());
  std::vector<double> probe(x.values().begin(), x.values().end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = probe[i];
    probe[i] = xi + h;
    const double fp = obj.evaluate(Vector(probe));
    probe[i] = xi - h;
    const double fm = obj.evaluate(Vector(probe));
    probe[i] = xi;
    grad[i] = (fp - fm) / (2.0 * h);
  }
  return Vector(std::move(grad));
}

Objective make_quadratic(const Matrix& q, const Vector& b) {
  SpdMatrix spd(q);
  if (b.size() != spd.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch, "quadratic: b must match Q");
  }
  Objective obj;
  obj.name = "quadratic";
  obj.dimension = b.size();
  obj.evaluate = [q = spd.matrix(), b](const Vector& x) {
    return 0.5 * dot(x, q * x) + dot(b, x);
  };
  obj.gradient = [q = spd.matrix(), b](const Vector& x) { return q * x + b; };
  return obj;
}

Objective make_rosenbrock() {
  Objective obj;
  obj.name = "rosenbrock";
  obj.dimension = 2;
  obj.evaluate = [](const Vector& x) {
    const double a = x[1] - x[0] * x[0];
    const double b = 1.0 - x[0];
    return 100.0 * a * a + b * b;
  };
  obj.gradient = [](const Vector& x) {
    const double a = x[1] - x[0] * x[0];
    return Vector{-400.0 * x[0] * a - 2.0 * (1.0 - x[0]), 200.0 * a};
  };
  return obj;
}

Objective make_sphere(std::size_t n) {
  Objective obj;
  obj.name = "sphere";
  obj.dimension = n;
  obj.evaluate = [](const Vector& x) { return 0.5 * dot(x, x); };
  obj.gradient = [](const Vector& x) { return x; };
  return obj;
}

Objective make_default_quadratic(std::size_t n) {
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = n == 1 ? 1.0 : 1.0 + 9.0 * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return make_quadratic(Matrix::diagonal(diag), Vector::zeros(n));
}

std::vector<Objective> builtin_objectives(std::size_t n) {
  return {make_sphere(n), make_rosenbrock(), make_default_quadratic(n)};
}

}  // namespace qnsd
