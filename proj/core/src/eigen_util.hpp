#pragma once

// Internal Eigen bridges; not installed. Public types stay Eigen-free.

#include <Eigen/Dense>

#include "tsap/matrix.hpp"

namespace tsap {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapMat = Eigen::Map<RowMat>;
using CMapMat = Eigen::Map<const RowMat>;
using MapVec = Eigen::Map<Eigen::VectorXd>;
using CMapVec = Eigen::Map<const Eigen::VectorXd>;

inline CMapMat view(const DenseMatrix& a) { return {a.data(), a.rows(), a.cols()}; }
inline MapMat view(DenseMatrix& a) { return {a.data(), a.rows(), a.cols()}; }
inline CMapVec view(const DenseVector& x) { return {x.data(), x.len()}; }
inline MapVec view(DenseVector& x) { return {x.data(), x.len()}; }

inline DenseMatrix to_matrix(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  DenseMatrix out(m.rows(), m.cols());
  view(out) = m;
  return out;
}

inline DenseVector to_vector(const Eigen::Ref<const Eigen::VectorXd>& v) {
  DenseVector out(v.size());
  view(out) = v;
  return out;
}

}  // namespace tsap
