#pragma once

#include <cstddef>
#include <cstdint>

#include "qnsd/linalg.hpp"
#include "qnsd/random.hpp"

namespace qnsd {

struct DirectionResult {
  Vector direction;  // unit length in ||.||_B
  double value;      // g^T d
};

inline constexpr double kZeroGradientNorm = 1e-300;

// Minimizer of g^T d subject to ||d||_B = 1:
//   d = -B^{-1} g / sqrt(g^T B^{-1} g),  g^T d = -sqrt(g^T B^{-1} g).
DirectionResult steepest_direction(const Vector& g, const SpdMatrix& b);

// -sqrt(g^T B^{-1} g), the minimum value attained above.
double direction_value(const Vector& g, const SpdMatrix& b);

// z / ||z||_B with z standard normal.  Redraws when ||z||_2 < 1e-12, up to
// 100 times, then throws kSamplingFailed.
Vector sample_unit_sphere(const SpdMatrix& b, std::uint64_t seed);
Vector sample_unit_sphere(const SpdMatrix& b, Rng& rng);

struct BruteForceOptions {
  std::size_t samples = 100'000;
  std::uint64_t seed = 42;
  unsigned workers = 1;
};

// Samples per RNG chunk.  Chunk k is drawn from derive_seed(seed, 0, k), so
// the result does not depend on the worker count.
inline constexpr std::size_t kSampleChunk = 4096;

// Pure sampling oracle for min g^T d on the B-sphere.  Ties are broken by
// lexicographic order on d.
DirectionResult brute_force_min(const Vector& g, const SpdMatrix& b,
                                const BruteForceOptions& options);

}  // namespace qnsd
