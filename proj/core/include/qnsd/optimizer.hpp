#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnsd/error.hpp"
#include "qnsd/linalg.hpp"

namespace qnsd {

struct Objective {
  std::string name;
  std::size_t dimension = 0;
  std::function<double(const Vector&)> evaluate;
  std::function<Vector(const Vector&)> gradient;
};

struct OptimizerConfig {
  double grad_tol = 1e-8;
  int max_iter = 500;
  double armijo_c = 1e-4;
  double backtrack_rho = 0.5;
  int max_backtracks = 60;
  double curvature_skip_tol = 1e-10;

  // Throws kInvalidArgument if any field is out of range.
  void validate() const;
};

enum class Method { kQuasiNewton, kSteepestDescent };
std::string_view to_string(Method method) noexcept;

enum class Termination { kGradientTolerance, kMaxIterations, kLineSearchFailed };
std::string_view to_string(Termination termination) noexcept;

struct IterationRecord {
  int k = 0;
  Vector x;
  double f = 0.0;
  double grad_norm = 0.0;
  // Step accepted from this iterate; absent on the final record.
  std::optional<double> alpha;
  // ||B_{k+1} s_k - y_k||_2 after the update; absent when skipped or for
  // steepest descent.
  std::optional<double> secant_residual;
  bool update_skipped = false;
};

struct OptTrace {
  Method method = Method::kQuasiNewton;
  std::vector<IterationRecord> records;
  Termination termination = Termination::kMaxIterations;

  // Number of accepted steps.
  int iterations() const noexcept;
  const IterationRecord& final_record() const { return records.back(); }
};

// Thrown by minimize when the line search fails; carries the partial trace.
class LineSearchError : public Error {
 public:
  LineSearchError(const std::string& what, OptTrace trace)
      : Error(ErrorCode::kLineSearchFailed, what), trace_(std::move(trace)) {}
  const OptTrace& trace() const noexcept { return trace_; }

 private:
  OptTrace trace_;
};

// State handed to an observer before each line search.
struct IterationView {
  int k;
  const Vector& x;
  const Vector& gradient;
  const SpdMatrix& hessian_approx;  // identity for steepest descent
  const Vector& direction;
};
using IterationObserver = std::function<void(const IterationView&)>;

// Direct BFGS update B' = B - (Bs s^T B)/(s^T B s) + (y y^T)/(y^T s).
// Throws kCurvatureTooSmall unless s^T y > tol * ||s|| ||y||.
SpdMatrix bfgs_update(const SpdMatrix& b, const Vector& s, const Vector& y,
                      double curvature_skip_tol = OptimizerConfig{}.curvature_skip_tol);

// Largest alpha in {1, rho, rho^2, ...} meeting the Armijo condition.
// Throws kInvalidArgument unless g^T d < 0 and kLineSearchFailed after
// max_backtracks reductions.
double backtracking_line_search(const Objective& obj, const Vector& x,
                                const Vector& d, const Vector& g,
                                const OptimizerConfig& cfg);

// B_0 = I.  Throws LineSearchError with the partial trace on failure.
OptTrace minimize(const Objective& obj, const Vector& x0, Method method,
                  const OptimizerConfig& cfg = {},
                  const IterationObserver& observer = {});

// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h.
Vector finite_diff_grad(const Objective& obj, const Vector& x, double h);

// 1/2 x^T Q x + b^T x.  Throws kNotPositiveDefinite for invalid Q.
Objective make_quadratic(const Matrix& q, const Vector& b);
// 100 (x2 - x1^2)^2 + (1 - x1)^2.
Objective make_rosenbrock();
// 1/2 ||x||^2.
Objective make_sphere(std::size_t n);
// Q = diag(1 .. 10) spaced linearly, b = 0.
Objective make_default_quadratic(std::size_t n);

// sphere(n), rosenbrock, default quadratic(n).
std::vector<Objective> builtin_objectives(std::size_t n = 2);

}  // namespace qnsd
