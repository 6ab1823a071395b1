#include "qnsd/inequalities.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qnsd/random.hpp"
#include "test_support.hpp"

namespace qnsd {
namespace {

constexpr int kFuzzCases = 20'000;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected qnsd::Error";
  return ErrorCode::kInvalidArgument;
}

// Forward direction of every equality condition: predicted => observed.
void expect_consistent(const InequalityReport& r) {
  EXPECT_EQ(r.gap, r.rhs - r.lhs);
  if (r.equality_predicted) {
    EXPECT_TRUE(r.equality_observed) << "lhs " << r.lhs << " rhs " << r.rhs;
  }
}

TEST(ReportTest, GapAndFlags) {
  const auto r = InequalityReport::compare(1.0, 2.0, false);
  EXPECT_EQ(r.gap, 1.0);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.equality_observed);
  EXPECT_FALSE(InequalityReport::compare(2.0, 1.0, false).holds);
  // Slack is relative to max(1, |rhs|).
  EXPECT_TRUE(InequalityReport::compare(1e6 + 1e-4, 1e6, false).holds);
  EXPECT_FALSE(InequalityReport::compare(1e6 + 1e-2, 1e6, false).holds);
}

TEST(WeightVectorTest, Validation) {
  EXPECT_NO_THROW(WeightVector({0.25, 0.75}));
  EXPECT_EQ(code_of([] { WeightVector({0.5, 0.6}); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { WeightVector({1.5, -0.5}); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { WeightVector({1.0, 0.0}); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { WeightVector(std::vector<double>{}); }),
            ErrorCode::kDimensionMismatch);
  const auto u = WeightVector::uniform(3);
  EXPECT_DOUBLE_EQ(u[0], 1.0 / 3.0);
}

TEST(LinearlyDependentTest, Examples) {
  EXPECT_TRUE(linearly_dependent(Vector{1.0, 2.0}, Vector{-2.0, -4.0}));
  EXPECT_FALSE(linearly_dependent(Vector{1.0, 0.0}, Vector{0.0, 1.0}));
  EXPECT_TRUE(linearly_dependent(Vector{1.0, 1.0}, Vector{1.0, 1.0 + 1e-14}));
  EXPECT_TRUE(linearly_dependent(Vector::zeros(2), Vector{3.0, 1.0}));
  EXPECT_FALSE(linearly_dependent(Vector{1.0, 1.0}, Vector{1.0, 1.1}));
  EXPECT_EQ(code_of([] { linearly_dependent(Vector{1.0}, Vector{1.0, 2.0}); }),
            ErrorCode::kDimensionMismatch);
}

TEST(LogBoundTest, Examples) {
  const auto one = check_log_bound(1.0);
  EXPECT_EQ(one.lhs, 0.0);
  EXPECT_EQ(one.rhs, 0.0);
  EXPECT_TRUE(one.equality_predicted);
  EXPECT_TRUE(one.equality_observed);

  const auto two = check_log_bound(2.0);
  EXPECT_DOUBLE_EQ(two.lhs, std::log(2.0));
  EXPECT_EQ(two.rhs, 1.0);
  EXPECT_GT(two.gap, 0.0);
  EXPECT_FALSE(two.equality_predicted);

  const auto half = check_log_bound(0.5);
  EXPECT_NEAR(half.lhs, -0.6931471805599453, 1e-15);
  EXPECT_EQ(half.rhs, -0.5);
  EXPECT_GT(half.gap, 0.0);
}

TEST(LogBoundTest, DomainError) {
  EXPECT_EQ(code_of([] { check_log_bound(0.0); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { check_log_bound(-1.0); }), ErrorCode::kDomainError);
}

TEST(AmGmTest, Examples) {
  const auto equal = check_weighted_am_gm(Vector{7.0, 7.0, 7.0}, WeightVector({0.2, 0.3, 0.5}));
  EXPECT_TRUE(equal.equality_predicted);
  EXPECT_TRUE(equal.equality_observed);

  // sqrt(1 * 4) = 2 against (1 + 4) / 2.
  const auto r = check_weighted_am_gm(Vector{1.0, 4.0}, WeightVector::uniform(2));
  EXPECT_NEAR(r.lhs, 2.0, 1e-15);
  EXPECT_DOUBLE_EQ(r.rhs, 2.5);
  EXPECT_FALSE(r.equality_predicted);

  const auto single = check_weighted_am_gm(Vector{3.5}, WeightVector({1.0}));
  EXPECT_NEAR(single.lhs, 3.5, 1e-15);
  EXPECT_EQ(single.rhs, 3.5);
  EXPECT_TRUE(single.equality_observed);
}

TEST(AmGmTest, Errors) {
  EXPECT_EQ(code_of([] { check_weighted_am_gm(Vector{1.0, 0.0}, WeightVector::uniform(2)); }),
            ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { check_weighted_am_gm(Vector{1.0}, WeightVector::uniform(2)); }),
            ErrorCode::kDimensionMismatch);
}

TEST(AmGmTest, LogSpaceAvoidsOverflow) {
  std::vector<double> big(200, 1e300);
  const auto r = check_weighted_am_gm(Vector(big), WeightVector::uniform(200));
  EXPECT_TRUE(std::isfinite(r.lhs));
  EXPECT_TRUE(r.equality_observed);
}

TEST(YoungTest, Examples) {
  const auto unit = check_young(1.0, 1.0, 2.0);
  EXPECT_EQ(unit.lhs, 1.0);
  EXPECT_EQ(unit.rhs, 1.0);
  EXPECT_TRUE(unit.equality_predicted);

  // x = sqrt(a), y = sqrt(b), p = 2 is two-term AM-GM.
  const double a = 3.0, b = 12.0;
  const auto amgm = check_young(std::sqrt(a), std::sqrt(b), 2.0);
  EXPECT_NEAR(amgm.lhs, std::sqrt(a * b), 1e-14);
  EXPECT_NEAR(amgm.rhs, (a + b) / 2.0, 1e-14);

  // q = 1.5: 2^3/3 + 1/1.5 = 10/3.
  const auto r = check_young(2.0, 1.0, 3.0);
  EXPECT_EQ(r.lhs, 2.0);
  EXPECT_NEAR(r.rhs, 10.0 / 3.0, 1e-15);
  EXPECT_FALSE(r.equality_predicted);
}

TEST(YoungTest, DomainErrors) {
  EXPECT_EQ(code_of([] { check_young(-1.0, 1.0, 2.0); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { check_young(1.0, -1.0, 2.0); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { check_young(1.0, 1.0, 1.0); }), ErrorCode::kDomainError);
}

TEST(HolderTest, Examples) {
  const auto ortho = check_holder(Vector{1.0, 0.0}, Vector{0.0, 1.0}, 3.0);
  EXPECT_EQ(ortho.lhs, 0.0);
  EXPECT_GT(ortho.rhs, 0.0);

  const auto parallel = check_holder(Vector{1.0, 1.0}, Vector{1.0, 1.0}, 2.0);
  EXPECT_EQ(parallel.lhs, 2.0);
  EXPECT_NEAR(parallel.rhs, 2.0, 1e-15);
  EXPECT_TRUE(parallel.equality_predicted);
  EXPECT_TRUE(parallel.equality_observed);

  // Equality is not characterized away from p = 2.
  EXPECT_FALSE(check_holder(Vector{1.0, 1.0}, Vector{1.0, 1.0}, 3.0).equality_predicted);
}

TEST(HolderTest, Errors) {
  EXPECT_EQ(code_of([] { check_holder(Vector{1.0}, Vector{1.0, 2.0}, 2.0); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { check_holder(Vector{1.0}, Vector{1.0}, 1.0); }),
            ErrorCode::kInvalidExponent);
}

TEST(CauchySchwarzTest, Examples) {
  const auto dep = check_cauchy_schwarz(Vector{1.0, 2.0}, Vector{2.0, 4.0});
  EXPECT_TRUE(dep.equality_predicted);
  EXPECT_TRUE(dep.equality_observed);
  const auto ortho = check_cauchy_schwarz(Vector{1.0, 0.0}, Vector{0.0, 1.0});
  EXPECT_EQ(ortho.lhs, 0.0);
  EXPECT_EQ(ortho.rhs, 1.0);
  EXPECT_EQ(code_of([] { check_cauchy_schwarz(Vector{1.0}, Vector{1.0, 2.0}); }),
            ErrorCode::kDimensionMismatch);
}

TEST(TransposeSpectralTest, Examples) {
  const auto id = check_transpose_spectral(Matrix::identity(3));
  EXPECT_NEAR(id.lhs, 1.0, 1e-14);
  EXPECT_NEAR(id.rhs, 1.0, 1e-14);
  EXPECT_TRUE(id.holds);
  EXPECT_TRUE(id.equality_predicted);

  const auto diag = check_transpose_spectral(Matrix::diagonal({5.0, 2.0}));
  EXPECT_NEAR(diag.lhs, 5.0, 1e-13);
  EXPECT_NEAR(diag.rhs, 5.0, 1e-13);

  Rng rng(21);
  const auto rect = check_transpose_spectral(gen::uniform_matrix(rng, 6, 4));
  EXPECT_TRUE(rect.holds);
  EXPECT_LE(std::abs(rect.gap), 1e-8 * std::max(1.0, rect.rhs));
}

TEST(GeneralizedCsTest, Examples) {
  const SpdMatrix a(Matrix::diagonal({4.0, 1.0}));
  const auto r = check_generalized_cs(a, Vector{1.0, 0.0}, Vector{0.0, 1.0});
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_DOUBLE_EQ(r.rhs, 2.0);
  EXPECT_FALSE(r.equality_predicted);
}

TEST(GeneralizedCsTest, EqualityAtInverseImage) {
  for (std::uint64_t t = 0; t < 1000; ++t) {
    Rng rng(derive_seed(22, 0, t));
    const std::size_t n = 1 + t % 8;
    const SpdMatrix a = gen::spd_matrix(rng, n);
    const Vector y = gen::signed_vector(rng, n);
    const double r = gen::uniform(rng, -5.0, 5.0);
    const Vector x = r * solve_spd(a.factor(), y);
    const auto rep = check_generalized_cs(a, x, y);
    EXPECT_TRUE(rep.equality_predicted);
    EXPECT_LE(std::abs(rep.gap), kEqualityTolerance * std::max(1.0, std::abs(rep.rhs)));
  }
}

TEST(GeneralizedCsTest, Errors) {
  EXPECT_EQ(code_of([] {
              check_generalized_cs(SpdMatrix::identity(2), Vector{1.0}, Vector{1.0, 2.0});
            }),
            ErrorCode::kDimensionMismatch);
}

// ---------------------------------------------------------------------------
// Fuzz properties.

TEST(InequalityFuzz, EveryCheckHoldsAndEqualityIsConsistent) {
  for (int t = 0; t < kFuzzCases; ++t) {
    Rng rng(derive_seed(23, 0, t));
    const std::size_t n = 1 + t % 8;
    const double p = gen::exponent(rng);
    const Vector x = gen::signed_vector(rng, n);
    const Vector y = gen::signed_vector(rng, n);
    const Vector a = gen::positive_vector(rng, n);
    const WeightVector w(gen::simplex_weights(rng, n));
    const SpdMatrix spd = gen::spd_matrix(rng, n);
    for (const auto& r : {check_log_bound(gen::log_uniform(rng)),
                          check_weighted_am_gm(a, w),
                          check_young(gen::log_uniform(rng), gen::log_uniform(rng), p),
                          check_holder(x, y, p), check_cauchy_schwarz(x, y),
                          check_generalized_cs(spd, x, y)}) {
      ASSERT_TRUE(r.holds) << "trial " << t << " lhs " << r.lhs << " rhs " << r.rhs;
      expect_consistent(r);
    }
  }
}

TEST(InequalityFuzz, EqualityConstructions) {
  for (int t = 0; t < 2000; ++t) {
    Rng rng(derive_seed(24, 0, t));
    const std::size_t n = 1 + t % 8;
    // All-equal a for weighted AM-GM.
    const double c = gen::log_uniform(rng);
    const auto amgm = check_weighted_am_gm(Vector(std::vector<double>(n, c)),
                                           WeightVector(gen::simplex_weights(rng, n)));
    EXPECT_TRUE(amgm.equality_predicted && amgm.equality_observed) << t;
    // x^p = y^q via y = x^(p - 1).
    const double p = gen::exponent(rng);
    const double x = std::exp(gen::uniform(rng, -2.0, 2.0));
    const auto young = check_young(x, std::pow(x, p - 1.0), p);
    EXPECT_TRUE(young.equality_predicted && young.equality_observed) << t;
    // Dependent vectors for Cauchy-Schwarz.
    const Vector v = gen::signed_vector(rng, n);
    const auto cs = check_cauchy_schwarz(v, gen::uniform(rng, -3.0, 3.0) * v);
    EXPECT_TRUE(cs.equality_predicted && cs.equality_observed) << t;
  }
}

TEST(InequalityFuzz, ReductionChain) {
  for (int t = 0; t < 10'000; ++t) {
    Rng rng(derive_seed(25, 0, t));
    const std::size_t n = 1 + t % 8;
    const Vector x = gen::signed_vector(rng, n);
    const Vector y = gen::signed_vector(rng, n);
    const auto cs = check_cauchy_schwarz(x, y);
    const auto holder = check_holder(x, y, 2.0);
    const auto gcs = check_generalized_cs(SpdMatrix::identity(n), x, y);
    const double scale = std::max(1.0, std::abs(cs.rhs));
    ASSERT_LE(std::abs(holder.lhs - cs.lhs), 1e-12 * scale);
    ASSERT_LE(std::abs(holder.rhs - cs.rhs), 1e-12 * scale);
    ASSERT_LE(std::abs(gcs.lhs - cs.lhs), 1e-12 * scale);
    ASSERT_LE(std::abs(gcs.rhs - cs.rhs), 1e-12 * scale);
    EXPECT_EQ(holder.equality_predicted, cs.equality_predicted);
    EXPECT_EQ(gcs.equality_predicted, cs.equality_predicted);

    // Young at p = 2 with square roots reproduces two-term AM-GM.
    const double a = gen::log_uniform(rng), b = gen::log_uniform(rng);
    const auto young = check_young(std::sqrt(a), std::sqrt(b), 2.0);
    const auto amgm = check_weighted_am_gm(Vector{a, b}, WeightVector::uniform(2));
    const double s2 = std::max(1.0, amgm.rhs);
    ASSERT_LE(std::abs(young.lhs - amgm.lhs), 1e-12 * s2);
    ASSERT_LE(std::abs(young.rhs - amgm.rhs), 1e-12 * s2);
  }
}

// Intermediate steps of the AM-GM argument: with R = sum w_i a_i,
// a_i/R - 1 - ln(a_i/R) >= 0 for each i and sum w_i ln(a_i/R) <= 0.
TEST(ProofSteps, WeightedAmGmIntermediates) {
  for (int t = 0; t < kFuzzCases; ++t) {
    Rng rng(derive_seed(26, 0, t));
    const std::size_t n = 1 + t % 8;
    const Vector a = gen::positive_vector(rng, n);
    const auto w = gen::simplex_weights(rng, n);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r += w[i] * a[i];
    double weighted_log = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ratio = a[i] / r;
      ASSERT_GE(ratio - 1.0 - std::log(ratio), -1e-15) << t;
      weighted_log += w[i] * std::log(ratio);
    }
    ASSERT_LE(weighted_log, 1e-12) << t;
  }
}

// Per-coordinate Young bound used for Hoelder, and its sum being <= 1.
TEST(ProofSteps, HolderPerCoordinateBound) {
  for (int t = 0; t < kFuzzCases; ++t) {
    Rng rng(derive_seed(27, 0, t));
    const std::size_t n = 1 + t % 8;
    const Vector x = gen::signed_vector(rng, n);
    const Vector y = gen::signed_vector(rng, n);
    const double p = gen::exponent(rng);
    const double q = conjugate_exponent(p);
    const double xp = p_norm(x, p), yq = p_norm(y, q);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double lhs = std::abs(x[i] * y[i]) / (xp * yq);
      const double rhs = std::pow(std::abs(x[i]) / xp, p) / p + std::pow(std::abs(y[i]) / yq, q) / q;
      ASSERT_LE(lhs, rhs + 1e-12) << t;
      total += lhs;
    }
    ASSERT_LE(total, 1.0 + 1e-12) << t;
  }
}

TEST(InequalityFuzz, TransposeSpectralHolds) {
  for (int t = 0; t < 2000; ++t) {
    Rng rng(derive_seed(28, 0, t));
    std::uniform_int_distribution<std::size_t> size(1, 8);
    const auto r = check_transpose_spectral(gen::uniform_matrix(rng, size(rng), size(rng)));
    ASSERT_TRUE(r.holds) << t;
    EXPECT_TRUE(r.equality_observed);
  }
}

}  // namespace
}  // namespace qnsd
