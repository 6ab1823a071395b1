#include "qnsd/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qnsd {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(where) + ": " + std::to_string(a) + " vs " +
                    std::to_string(b));
  }
}

}  // namespace

InequalityReport InequalityReport::compare(double lhs, double rhs,
                                           bool equality_predicted,
                                           double slack) {
  InequalityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = rhs - lhs;
  const double scale = std::max(1.0, std::abs(rhs));
  r.holds = r.gap >= -slack * scale;
  r.equality_predicted = equality_predicted;
  r.equality_observed = std::abs(r.gap) <= kEqualityTolerance * scale;
  return r;
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "weight vector must be nonempty");
  }
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kDomainError, "weights must be positive and finite");
    }
  }
  const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::kDomainError,
                "weights must sum to 1, got " + std::to_string(sum));
  }
}

WeightVector WeightVector::uniform(std::size_t n) {
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double conjugate_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::kInvalidExponent, "exponent must satisfy p > 1");
  }
  return p / (p - 1.0);
}

bool linearly_dependent(const Vector& u, const Vector& v) {
  require_same_size(u.size(), v.size(), "linearly_dependent");
  if (u.is_zero() || v.is_zero()) return true;
  return std::abs(dot(u, v)) >= (1.0 - kDependenceTolerance) * norm2(u) * norm2(v);
}

InequalityReport check_log_bound(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::kDomainError, "log bound requires finite x > 0");
  }
  return InequalityReport::compare(std::log(x), x - 1.0, std::abs(x - 1.0) <= 1e-9);
}

InequalityReport check_weighted_am_gm(const Vector& a, const WeightVector& w) {
  require_same_size(a.size(), w.size(), "weighted AM-GM");
  for (double ai : a.values()) {
    if (!(ai > 0.0)) throw Error(ErrorCode::kDomainError, "AM-GM requires a_i > 0");
  }
  // Geometric side in log space.
  double log_geo = 0.0;
  double arith = 0.0;
  double spread = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    log_geo += w[i] * std::log(a[i]);
    arith += w[i] * a[i];
    spread = std::max(spread, std::abs(a[i] - a[0]));
  }
  const bool all_equal = spread <= 1e-9 * std::max(1.0, a[0]);
  return InequalityReport::compare(std::exp(log_geo), arith, all_equal);
}

InequalityReport check_young(double x, double y, double p) {
  if (!(x >= 0.0) || !(y >= 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorCode::kDomainError, "Young inequality requires x, y >= 0");
  }
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::kDomainError, "Young inequality requires p > 1");
  }
  const double q = p / (p - 1.0);
  const double xp = std::pow(x, p);
  const double yq = std::pow(y, q);
  const bool equal_powers = std::abs(xp - yq) <= 1e-9 * std::max(1.0, xp);
  return InequalityReport::compare(x * y, xp / p + yq / q, equal_powers);
}

InequalityReport check_holder(const Vector& x, const Vector& y, double p) {
  require_same_size(x.size(), y.size(), "Hoelder");
  const double q = conjugate_exponent(p);
  const double lhs = std::abs(dot(x, y));
  const double rhs = p_norm(x, p) * p_norm(y, q);
  // Only the p = 2 equality case is characterized here.
  const bool predicted = p == 2.0 && linearly_dependent(x, y);
  return InequalityReport::compare(lhs, rhs, predicted);
}

InequalityReport check_cauchy_schwarz(const Vector& x, const Vector& y) {
  require_same_size(x.size(), y.size(), "Cauchy-Schwarz");
  return InequalityReport::compare(std::abs(dot(x, y)), norm2(x) * norm2(y),
                                   linearly_dependent(x, y));
}

InequalityReport check_transpose_spectral(const Matrix& a) {
  const double lhs = spectral_norm(a.transpose());
  const double rhs = spectral_norm(a);
  InequalityReport r = InequalityReport::compare(lhs, rhs, true);
  // Two-sided: this is an identity, not a one-way bound.
  r.holds = std::abs(r.gap) <= 1e-8 * std::max(1.0, rhs);
  return r;
}

InequalityReport check_generalized_cs(const SpdMatrix& a, const Vector& x,
                                      const Vector& y) {
  require_same_size(a.dimension(), x.size(), "generalized Cauchy-Schwarz");
  require_same_size(a.dimension(), y.size(), "generalized Cauchy-Schwarz");
  const Vector ainv_y = solve_spd(a.factor(), y);
  const double lhs = std::abs(dot(x, y));
  const double rhs = ellipsoid_norm(a, x) * std::sqrt(std::max(0.0, dot(y, ainv_y)));
  return InequalityReport::compare(lhs, rhs, linearly_dependent(x, ainv_y));
}

}  // namespace qnsd
