#pragma once

// Seeded generators for fuzz inputs.  Every trial derives its own seed from
// a master seed, so results never depend on how trials are scheduled.

#include <cstddef>
#include <cstdint>
#include <random>

#include "qnsd/linalg.hpp"

namespace qnsd {

using Rng = std::mt19937_64;

// SplitMix64 finalizer over (master, stream, index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index) noexcept;

namespace gen {

inline constexpr double kLogUniformMin = 1e-3;
inline constexpr double kLogUniformMax = 1e3;
inline constexpr double kExponentMin = 1.1;
inline constexpr double kExponentMax = 10.0;
inline constexpr double kSpdShift = 1e-3;
// Better-conditioned B for the direction oracle.  Normalized Gaussian draws
// thin out along the stiff axes of an ill-conditioned B.
inline constexpr double kOracleSpdShift = 0.1;

double uniform(Rng& rng, double lo, double hi);
// Magnitude log-uniform over [1e-3, 1e3].
double log_uniform(Rng& rng);
// Positive entries, log-uniform.
Vector positive_vector(Rng& rng, std::size_t n);
// Log-uniform magnitudes with random signs.
Vector signed_vector(Rng& rng, std::size_t n);
// Standard normal entries.
Vector normal_vector(Rng& rng, std::size_t n);
// Flat Dirichlet draw (normalized exponentials).
std::vector<double> simplex_weights(Rng& rng, std::size_t n);
double exponent(Rng& rng);
// Entries uniform in [-1, 1].
Matrix uniform_matrix(Rng& rng, std::size_t rows, std::size_t cols);
// M^T M + n * shift * I with M uniform in [-1, 1].
SpdMatrix spd_matrix(Rng& rng, std::size_t n, double shift = kSpdShift);

}  // namespace gen
}  // namespace qnsd
