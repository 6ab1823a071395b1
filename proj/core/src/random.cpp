#include "qnsd/random.hpp"

#include <cmath>

namespace qnsd {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index) noexcept {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(master) ^ stream) ^ index);
}

namespace gen {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(Rng& rng) {
  return std::exp(uniform(rng, std::log(kLogUniformMin), std::log(kLogUniformMax)));
}

Vector positive_vector(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = log_uniform(rng);
  return Vector(std::move(v));
}

Vector signed_vector(Rng& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<double> v(n);
  for (double& x : v) {
    const double mag = log_uniform(rng);
    x = coin(rng) ? mag : -mag;
  }
  return Vector(std::move(v));
}

Vector normal_vector(Rng& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  std::vector<double> v(n);
  for (double& x : v) x = normal(rng);
  return Vector(std::move(v));
}

std::vector<double> simplex_weights(Rng& rng, std::size_t n) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  double sum = 0.0;
  for (double& x : w) {
    // Keep weights strictly positive.
    do {
      x = expo(rng);
    } while (x <= 0.0);
    sum += x;
  }
  for (double& x : w) x /= sum;
  return w;
}

double exponent(Rng& rng) { return uniform(rng, kExponentMin, kExponentMax); }

Matrix uniform_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<double> data(rows * cols);
  for (double& x : data) x = uniform(rng, -1.0, 1.0);
  return Matrix(rows, cols, std::move(data));
}

SpdMatrix spd_matrix(Rng& rng, std::size_t n, double shift) {
  const Matrix m = uniform_matrix(rng, n, n);
  const Matrix mtm = m.transpose() * m;
  std::vector<double> data(mtm.values().begin(), mtm.values().end());
  // Symmetrize exactly; M^T M is symmetric only up to summation order.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double avg = 0.5 * (data[i * n + j] + data[j * n + i]);
      data[i * n + j] = avg;
      data[j * n + i] = avg;
    }
    data[i * n + i] += static_cast<double>(n) * shift;
  }
  return SpdMatrix(Matrix(n, n, std::move(data)));
}

}  // namespace gen
}  // namespace qnsd
