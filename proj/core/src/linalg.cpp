#include "qnsd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace qnsd {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kInvalidExponent: return "InvalidExponent";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kZeroGradient: return "ZeroGradient";
    case ErrorCode::kCurvatureTooSmall: return "CurvatureTooSmall";
    case ErrorCode::kLineSearchFailed: return "LineSearchFailed";
    case ErrorCode::kSamplingFailed: return "SamplingFailed";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFiniteValue, "entry is not finite");
    }
  }
}

void require_same_size(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(where) + ": " + std::to_string(a) + " vs " +
                    std::to_string(b));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Vector

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector dimension must be >= 1");
  }
  require_finite(entries_);
}

Vector::Vector(std::initializer_list<double> entries)
    : Vector(std::vector<double>(entries)) {}

Vector Vector::zeros(std::size_t n) { return Vector(std::vector<double>(n, 0.0)); }
Vector Vector::ones(std::size_t n) { return Vector(std::vector<double>(n, 1.0)); }

bool Vector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](double v) { return v == 0.0; });
}

Vector Vector::operator-() const {
  std::vector<double> out(entries_.size());
  std::transform(entries_.begin(), entries_.end(), out.begin(),
                 [](double v) { return -v; });
  return Vector(std::move(out));
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_size(a.size(), b.size(), "vector add");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return Vector(std::move(out));
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_size(a.size(), b.size(), "vector subtract");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return Vector(std::move(out));
}

Vector operator*(double s, const Vector& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return Vector(std::move(out));
}

double dot(const Vector& a, const Vector& b) {
  require_same_size(a.size(), b.size(), "dot");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double norm2(const Vector& v) {
  // Scaled accumulation so extreme magnitudes neither overflow nor underflow.
  double scale = 0.0;
  for (double x : v.values()) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double x : v.values()) {
    const double r = x / scale;
    sum += r * r;
  }
  return scale * std::sqrt(sum);
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix dimensions must be >= 1");
  }
  require_same_size(data_.size(), rows_ * cols_, "matrix storage");
  require_finite(data_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require_same_size(row.size(), cols_, "matrix row");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix dimensions must be >= 1");
  }
  require_finite(data_);
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, std::vector<double>(rows * cols, 0.0));
}

Matrix Matrix::identity(std::size_t n) {
  std::vector<double> data(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) data[i * n + i] = 1.0;
  return Matrix(n, n, std::move(data));
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  const std::size_t n = diag.size();
  std::vector<double> data(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) data[i * n + i] = diag[i];
  return Matrix(n, n, std::move(data));
}

Matrix Matrix::diagonal(std::initializer_list<double> diag) {
  return diagonal(std::span<const double>(diag.begin(), diag.size()));
}

Matrix Matrix::transpose() const {
  std::vector<double> out(data_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = (*this)(i, j);
  return Matrix(cols_, rows_, std::move(out));
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  require_same_size(a.cols(), v.size(), "matrix-vector product");
  std::vector<double> out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * v[j];
    out[i] = sum;
  }
  return Vector(std::move(out));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_size(a.cols(), b.rows(), "matrix product");
  std::vector<double> out(a.rows() * b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[i * b.cols() + j] += aik * b(k, j);
    }
  return Matrix(a.rows(), b.cols(), std::move(out));
}

bool is_symmetric(const Matrix& a) {
  if (!a.is_square()) return false;
  const double tol = 1e-12 * std::max(1.0, a.max_abs());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Factorization

Matrix CongruenceFactor::reconstruct() const {
  return lower_ * lower_.transpose();
}

Vector CongruenceFactor::apply_transpose(const Vector& v) const {
  const std::size_t n = dimension();
  require_same_size(v.size(), n, "apply_transpose");
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = i; j < n; ++j) sum += lower_(j, i) * v[j];
    out[i] = sum;
  }
  return Vector(std::move(out));
}

CongruenceFactor factorize(const Matrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch, "factorize requires a square matrix");
  }
  if (!is_symmetric(a)) {
    throw Error(ErrorCode::kNotSymmetric, "factorize requires a symmetric matrix");
  }
  const std::size_t n = a.rows();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, a(i, i));
  const double threshold = kPivotTolerance * max_diag;

  std::vector<double> l(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double pivot = a(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l[j * n + k] * l[j * n + k];
    if (!(pivot > threshold) || max_diag <= 0.0) {
      throw Error(ErrorCode::kNotPositiveDefinite,
                  "pivot " + std::to_string(j) + " is " + std::to_string(pivot));
    }
    const double ljj = std::sqrt(pivot);
    l[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      // Lower triangle of A only; symmetry was checked above.
      double sum = a(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = sum / ljj;
    }
  }
  return CongruenceFactor(Matrix(n, n, std::move(l)));
}

SpdMatrix::SpdMatrix(Matrix a) : matrix_(std::move(a)), factor_(factorize(matrix_)) {}

CongruenceFactor factorize(const SpdMatrix& a) { return a.factor(); }

Vector solve_spd(const CongruenceFactor& factor, const Vector& b) {
  const std::size_t n = factor.dimension();
  require_same_size(b.size(), n, "solve_spd");
  const Matrix& l = factor.lower();

  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = b[i];
    for (std::size_t k = 0; k < i; ++k) sum -= l(i, k) * z[k];
    z[i] = sum / l(i, i);
  }
  std::vector<double> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double sum = z[ii];
    for (std::size_t k = ii + 1; k < n; ++k) sum -= l(k, ii) * x[k];
    x[ii] = sum / l(ii, ii);
  }
  return Vector(std::move(x));
}

// ---------------------------------------------------------------------------
// Norms

double ellipsoid_norm(const Matrix& a, const Vector& v) {
  require_same_size(a.rows(), v.size(), "ellipsoid_norm");
  require_same_size(a.cols(), v.size(), "ellipsoid_norm");
  double quad = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += a(i, j) * v[j];
    quad += v[i] * row;
  }
  // Rounding can push a tiny quadratic form below zero.
  return std::sqrt(std::max(quad, 0.0));
}

double ellipsoid_norm(const SpdMatrix& a, const Vector& v) {
  return ellipsoid_norm(a.matrix(), v);
}

double p_norm(const Vector& v, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::kInvalidExponent, "p-norm requires p > 1");
  }
  double scale = 0.0;
  for (double x : v.values()) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double x : v.values()) sum += std::pow(std::abs(x) / scale, p);
  return scale * std::pow(sum, 1.0 / p);
}

double spectral_norm(const Matrix& a, const PowerIterationOptions& options) {
  if (a.max_abs() == 0.0) return 0.0;
  const std::size_t n = a.cols();
  const Matrix at = a.transpose();

  // All-ones start with a seeded perturbation.
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  std::vector<double> start(n);
  for (double& s : start) s = 1.0 + jitter(rng);
  Vector v(std::move(start));
  v = (1.0 / norm2(v)) * v;

  double previous = -1.0;
  for (int it = 0; it < options.max_iterations; ++it) {
    const Vector av = a * v;
    const double rayleigh = dot(av, av);
    if (previous >= 0.0 &&
        std::abs(rayleigh - previous) < options.relative_tolerance * rayleigh) {
      return std::sqrt(rayleigh);
    }
    previous = rayleigh;
    const Vector next = at * av;
    const double len = norm2(next);
    if (len == 0.0) {
      throw Error(ErrorCode::kNoConvergence, "iterate fell into the null space");
    }
    v = (1.0 / len) * next;
  }
  throw Error(ErrorCode::kNoConvergence,
              "power iteration did not converge in " +
                  std::to_string(options.max_iterations) + " iterations");
}

}  // namespace qnsd
