#include "tsap/matrix.hpp"

#include <cmath>

#include "eigen_util.hpp"

namespace tsap {

DenseMatrix DenseMatrix::from_data(index_t rows, index_t cols, std::vector<double> data) {
  if (rows < 0 || cols < 0 || data.size() != static_cast<size_t>(rows * cols))
    throw std::invalid_argument("DenseMatrix::from_data: size mismatch");
  DenseMatrix out;
  out.rows_ = rows;
  out.cols_ = cols;
  out.data_ = std::move(data);
  if (!out.all_finite())
    throw std::invalid_argument("DenseMatrix::from_data: non-finite entry");
  return out;
}

DenseMatrix DenseMatrix::identity(index_t n) {
  DenseMatrix out(n, n);
  for (index_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

bool DenseMatrix::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

DenseVector DenseVector::from_data(std::vector<double> data) {
  DenseVector out;
  out.data_ = std::move(data);
  if (!out.all_finite())
    throw std::invalid_argument("DenseVector::from_data: non-finite entry");
  return out;
}

bool DenseVector::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

DenseVector matvec(const DenseMatrix& a, const DenseVector& x) {
  if (a.cols() != x.len()) throw std::invalid_argument("matvec: dimension mismatch");
  DenseVector out(a.rows());
  view(out).noalias() = view(a) * view(x);
  return out;
}

DenseVector matvec_transposed(const DenseMatrix& a, const DenseVector& x) {
  if (a.rows() != x.len())
    throw std::invalid_argument("matvec_transposed: dimension mismatch");
  DenseVector out(a.cols());
  view(out).noalias() = view(a).transpose() * view(x);
  return out;
}

SvdFactors svd_compact(const DenseMatrix& a) {
  const index_t m = a.rows(), n = a.cols();
  if (std::min(m, n) > 4096)
    throw std::invalid_argument("svd_compact: exceeds the 4096 desk-scale guard");
  SvdFactors out;
  if (m == 0 || n == 0) {
    out.u = DenseMatrix(m, 0);
    out.v = DenseMatrix(n, 0);
    return out;
  }
  Eigen::MatrixXd mat = view(a);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success)
    throw NumericalError("svd_compact: iteration did not converge");
  const auto& sv = svd.singularValues();
  const double cutoff =
      static_cast<double>(std::max(m, n)) * (sv.size() ? sv(0) : 0.0) * 0x1.0p-46;
  index_t rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  out.rank = rank;
  out.u = to_matrix(svd.matrixU().leftCols(rank));
  out.v = to_matrix(svd.matrixV().leftCols(rank));
  out.sigma.assign(sv.data(), sv.data() + rank);
  return out;
}

DenseVector cholesky_solve(const DenseMatrix& g, const DenseVector& rhs, double jitter) {
  const index_t k = g.rows();
  if (g.cols() != k || rhs.len() != k)
    throw std::invalid_argument("cholesky_solve: shape mismatch");
  auto gm = view(g);
  const double scale = gm.cwiseAbs().maxCoeff();
  if (scale > 0.0 && (gm - gm.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw std::invalid_argument("cholesky_solve: matrix not symmetric");

  Eigen::MatrixXd work = gm;
  double j = jitter;
  const double step = gm.trace() / static_cast<double>(k) * 1e-12;
  for (int attempt = 0; attempt <= 8; ++attempt) {
    Eigen::MatrixXd shifted = work;
    if (j != 0.0) shifted.diagonal().array() += j;
    Eigen::LLT<Eigen::MatrixXd> llt(shifted);
    if (llt.info() == Eigen::Success) {
      DenseVector out(k);
      view(out) = llt.solve(Eigen::VectorXd(view(rhs)));
      return out;
    }
    j = (j == 0.0) ? step : 2.0 * j;
  }
  throw DegenerateSketch("cholesky_solve: non-PD after jitter escalation");
}

double norm2(const DenseVector& x) { return view(x).norm(); }
double frobenius_norm(const DenseMatrix& a) { return view(a).norm(); }

}  // namespace tsap
