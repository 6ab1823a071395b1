#pragma once

// One check per inequality in the chain
//   ln x <= x - 1  ->  weighted AM-GM  ->  Young  ->  Hoelder
//   ->  Cauchy-Schwarz  ->  generalized Cauchy-Schwarz,
// plus ||A^T||_2 = ||A||_2.  Each check returns both sides, the gap and
// whether the known equality condition applies to the input.

#include <span>
#include <vector>

#include "qnsd/linalg.hpp"

namespace qnsd {

inline constexpr double kInequalitySlack = 1e-9;
inline constexpr double kEqualityTolerance = 1e-8;
inline constexpr double kDependenceTolerance = 1e-10;

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // rhs - lhs
  bool holds = false;
  bool equality_predicted = false;
  bool equality_observed = false;

  // Builds a report from the two sides using the default slack.
  static InequalityReport compare(double lhs, double rhs,
                                  bool equality_predicted,
                                  double slack = kInequalitySlack);
};

// Positive weights summing to one (within 1e-12).
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);
  static WeightVector uniform(std::size_t n);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const noexcept { return weights_; }

 private:
  std::vector<double> weights_;
};

// u = 0, v = 0, or |u^T v| >= (1 - 1e-10) ||u|| ||v||.
bool linearly_dependent(const Vector& u, const Vector& v);

InequalityReport check_log_bound(double x);
InequalityReport check_weighted_am_gm(const Vector& a, const WeightVector& w);
InequalityReport check_young(double x, double y, double p);
InequalityReport check_holder(const Vector& x, const Vector& y, double p);
InequalityReport check_cauchy_schwarz(const Vector& x, const Vector& y);
InequalityReport check_transpose_spectral(const Matrix& a);
InequalityReport check_generalized_cs(const SpdMatrix& a, const Vector& x,
                                      const Vector& y);

// Hoelder conjugate p / (p - 1).
double conjugate_exponent(double p);

}  // namespace qnsd
