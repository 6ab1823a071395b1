#include "qnsd/descent.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <string>
#include <thread>

namespace qnsd {

namespace {

void require_dims(const Vector& g, const SpdMatrix& b) {
  if (g.size() != b.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "gradient has dimension " + std::to_string(g.size()) +
                    ", matrix " + std::to_string(b.dimension()));
  }
}

struct Candidate {
  double value;
  Vector direction;
};

// Strict order on (value, lexicographic d).
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  const auto da = a.direction.values();
  const auto db = b.direction.values();
  return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
}

void keep_best(std::optional<Candidate>& best, Candidate c) {
  if (!best || better(c, *best)) best = std::move(c);
}

}  // namespace

DirectionResult steepest_direction(const Vector& g, const SpdMatrix& b) {
  require_dims(g, b);
  const double gnorm = norm2(g);
  if (gnorm <= kZeroGradientNorm) {
    throw Error(ErrorCode::kZeroGradient, "direction is undefined for g = 0");
  }
  // The direction is invariant to the scale of g, so work with g / ||g||
  // and restore the scale in the attained value only.
  const Vector unit_g = (1.0 / gnorm) * g;
  const Vector binv_g = solve_spd(b.factor(), unit_g);
  const double curvature = std::sqrt(dot(unit_g, binv_g));
  return DirectionResult{(-1.0 / curvature) * binv_g, -gnorm * curvature};
}

double direction_value(const Vector& g, const SpdMatrix& b) {
  return steepest_direction(g, b).value;
}

Vector sample_unit_sphere(const SpdMatrix& b, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> z(b.dimension());
  for (int attempt = 0; attempt < 100; ++attempt) {
    for (double& zi : z) zi = normal(rng);
    const Vector draw(z);
    if (norm2(draw) < 1e-12) continue;
    return (1.0 / ellipsoid_norm(b, draw)) * draw;
  }
  throw Error(ErrorCode::kSamplingFailed, "100 consecutive degenerate draws");
}

Vector sample_unit_sphere(const SpdMatrix& b, std::uint64_t seed) {
  Rng rng(seed);
  return sample_unit_sphere(b, rng);
}

DirectionResult brute_force_min(const Vector& g, const SpdMatrix& b,
                                const BruteForceOptions& options) {
  require_dims(g, b);
  if (options.samples < 1) {
    throw Error(ErrorCode::kInvalidArgument, "brute_force_min needs samples >= 1");
  }
  const std::size_t chunks = (options.samples + kSampleChunk - 1) / kSampleChunk;
  const unsigned workers = static_cast<unsigned>(
      std::clamp<std::size_t>(options.workers, 1, chunks));

  auto run_chunk = [&](std::size_t chunk, std::optional<Candidate>& best) {
    Rng rng(derive_seed(options.seed, 0, chunk));
    const std::size_t begin = chunk * kSampleChunk;
    const std::size_t end = std::min(options.samples, begin + kSampleChunk);
    for (std::size_t i = begin; i < end; ++i) {
      Vector d = sample_unit_sphere(b, rng);
      const double value = dot(g, d);
      keep_best(best, Candidate{value, std::move(d)});
    }
  };

  std::vector<std::optional<Candidate>> per_worker(workers);
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c, per_worker[0]);
  } else {
    std::vector<std::exception_ptr> failures(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t c = w; c < chunks; c += workers) run_chunk(c, per_worker[w]);
          } catch (...) {
            failures[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  std::optional<Candidate> best;
  for (auto& candidate : per_worker) {
    if (candidate) keep_best(best, std::move(*candidate));
  }
  return DirectionResult{std::move(best->direction), best->value};
}

}  // namespace qnsd
