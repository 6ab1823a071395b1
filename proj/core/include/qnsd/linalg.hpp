#pragma once

// Dense linear algebra at desk scale: vectors, row-major matrices, SPD
// validation through a Cholesky-style congruence factor, triangular solves,
// p-norms, ellipsoid norms and the spectral norm by power iteration.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "qnsd/error.hpp"

namespace qnsd {

// Fixed-dimension vector of finite reals.
class Vector {
 public:
  explicit Vector(std::vector<double> entries);
  Vector(std::initializer_list<double> entries);

  static Vector zeros(std::size_t n);
  static Vector ones(std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> values() const noexcept { return entries_; }

  bool is_zero() const noexcept;

  Vector operator-() const;
  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator*(double s, const Vector& v);
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> entries_;
};

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& v);

// Dense row-major matrix with rows, cols >= 1.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> diag);
  static Matrix diagonal(std::initializer_list<double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<const double> values() const noexcept { return data_; }

  Matrix transpose() const;
  double max_abs() const noexcept;

  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

// |A_ij - A_ji| <= 1e-12 * max(1, max|A_kl|) for all i, j.
bool is_symmetric(const Matrix& a);

// Lower-triangular L with positive diagonal and L L^T = A.  With P = L^{-T}
// this is the congruence P^T A P = I; with B = L^T it is A = B^T B.
class CongruenceFactor {
 public:
  const Matrix& lower() const noexcept { return lower_; }
  std::size_t dimension() const noexcept { return lower_.rows(); }

  // L L^T, for reconstruction checks.
  Matrix reconstruct() const;
  // L^T v, so that ||v||_A = ||L^T v||_2.
  Vector apply_transpose(const Vector& v) const;

 private:
  friend CongruenceFactor factorize(const Matrix& a);
  explicit CongruenceFactor(Matrix lower) : lower_(std::move(lower)) {}

  Matrix lower_;
};

// Relative pivot threshold: a pivot <= kPivotTolerance * max(diag(A)) means
// A is treated as not positive definite.
inline constexpr double kPivotTolerance = 1e-13;

// Throws kDimensionMismatch for non-square input, kNotSymmetric, or
// kNotPositiveDefinite when a pivot falls below the threshold.
CongruenceFactor factorize(const Matrix& a);

// Symmetric positive definite matrix.  Construction runs the factorization,
// so an SpdMatrix always carries a valid congruence factor.
class SpdMatrix {
 public:
  explicit SpdMatrix(Matrix a);

  static SpdMatrix identity(std::size_t n) { return SpdMatrix(Matrix::identity(n)); }

  std::size_t dimension() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  const CongruenceFactor& factor() const noexcept { return factor_; }

 private:
  Matrix matrix_;
  CongruenceFactor factor_;
};

CongruenceFactor factorize(const SpdMatrix& a);

// Solves L L^T x = b by forward then backward substitution.
Vector solve_spd(const CongruenceFactor& factor, const Vector& b);

// sqrt(v^T A v), evaluated directly from the matrix entries.
double ellipsoid_norm(const SpdMatrix& a, const Vector& v);
double ellipsoid_norm(const Matrix& a, const Vector& v);

// (sum |v_i|^p)^(1/p); throws kInvalidExponent unless p > 1.
double p_norm(const Vector& v, double p);

struct PowerIterationOptions {
  double relative_tolerance = 1e-14;
  int max_iterations = 10'000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

// Largest singular value via power iteration on A^T A.  Throws
// kNoConvergence when the iteration cap is reached first.
double spectral_norm(const Matrix& a, const PowerIterationOptions& options = {});

}  // namespace qnsd
