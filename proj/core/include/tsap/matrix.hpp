#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsap {

// Thrown when a factorization or iteration fails numerically.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a realized sketch turns out rank-deficient; callers are
// expected to resample with a fresh seed.
struct DegenerateSketch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using index_t = std::int64_t;

// Dense row-major matrix of 64-bit floats. All entries are required to be
// finite; `from_data` validates, the unchecked constructors are for internal
// code that produces values from already-finite inputs.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(index_t rows, index_t cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), 0.0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("DenseMatrix: negative shape");
  }

  static DenseMatrix from_data(index_t rows, index_t cols, std::vector<double> data);
  static DenseMatrix identity(index_t n);

  index_t rows() const { return rows_; }
  index_t cols() const { return cols_; }
  double& operator()(index_t i, index_t j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
  double operator()(index_t i, index_t j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  const std::vector<double>& storage() const { return data_; }

  bool all_finite() const;

 private:
  index_t rows_ = 0;
  index_t cols_ = 0;
  std::vector<double> data_;
};

class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(index_t len) : data_(static_cast<size_t>(len), 0.0) {
    if (len < 0) throw std::invalid_argument("DenseVector: negative length");
  }
  static DenseVector from_data(std::vector<double> data);

  index_t len() const { return static_cast<index_t>(data_.size()); }
  double& operator[](index_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](index_t i) const { return data_[static_cast<size_t>(i)]; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  const std::vector<double>& storage() const { return data_; }

  bool all_finite() const;

 private:
  std::vector<double> data_;
};

// Compact SVD A = U diag(sigma) V^T restricted to the numerical rank.
// U has orthonormal columns (rows(A) x rank), V likewise (cols(A) x rank),
// sigma is nonincreasing and positive.
struct SvdFactors {
  DenseMatrix u;
  std::vector<double> sigma;
  DenseMatrix v;
  index_t rank = 0;
};

DenseVector matvec(const DenseMatrix& a, const DenseVector& x);
DenseVector matvec_transposed(const DenseMatrix& a, const DenseVector& x);

// Numerical rank cutoff: sigma_i > max(rows, cols) * sigma_1 * 2^-46.
SvdFactors svd_compact(const DenseMatrix& a);

// Solves (G + jitter*I) u = rhs for symmetric positive definite G via
// Cholesky. If the factorization hits a non-positive pivot, the jitter is
// escalated from trace(G)/k * 1e-12, doubling up to 8 times, before the
// solve is abandoned with DegenerateSketch.
DenseVector cholesky_solve(const DenseMatrix& g, const DenseVector& rhs, double jitter = 0.0);

double norm2(const DenseVector& x);
double frobenius_norm(const DenseMatrix& a);

}  // namespace tsap
