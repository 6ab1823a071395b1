#pragma once

// Test-only helpers and oracles.  Nothing here calls the code paths it is
// used to check.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qnsd/linalg.hpp"

namespace qnsd::testing {

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i)
    m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  return m;
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Minimum of g^T d over ||d||_B = 1 for 2x2 SPD B, by enumerating the
// angle of d and rescaling each direction onto the B-sphere.
inline double enumerate_min_2d(const Vector& g, const Matrix& b, int steps = 2'000'000) {
  double best = INFINITY;
  for (int i = 0; i < steps; ++i) {
    const double t = 2.0 * std::numbers::pi * i / steps;
    const double u0 = std::cos(t), u1 = std::sin(t);
    const double quad = u0 * (b(0, 0) * u0 + b(0, 1) * u1) + u1 * (b(1, 0) * u0 + b(1, 1) * u1);
    const double s = 1.0 / std::sqrt(quad);
    best = std::min(best, s * (g[0] * u0 + g[1] * u1));
  }
  return best;
}

// Largest eigenvalue of a symmetric 2x2 matrix, closed form.
inline double sym2_max_eig(double a, double b, double c) {
  const double mean = 0.5 * (a + c);
  return mean + std::sqrt(0.25 * (a - c) * (a - c) + b * b);
}

// Angle between two nonzero vectors; the chord form stays accurate near 0.
inline double angle_between(const Vector& a, const Vector& b) {
  const Vector chord = (1.0 / norm2(a)) * a - (1.0 / norm2(b)) * b;
  return 2.0 * std::asin(std::min(1.0, 0.5 * norm2(chord)));
}

}  // namespace qnsd::testing
