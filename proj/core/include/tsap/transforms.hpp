#pragma once

#include <cstdint>
#include <vector>

#include "tsap/matrix.hpp"

namespace tsap {

// Randomized Hadamard transform Q = (1/sqrt(m_pad)) H D, with the input
// zero-padded from m_orig to the next power of two. The Rademacher diagonal
// D is realized at plan creation and recorded with its seed.
struct RhtPlan {
  index_t m_orig = 0;
  index_t m_pad = 0;
  std::vector<double> signs;  // +-1, length m_pad
  std::uint64_t seed = 0;
};

RhtPlan make_rht_plan(index_t m_orig, std::uint64_t seed);

// Qx for x of length m_orig; result has length m_pad and the same norm.
DenseVector rht_apply_vec(const RhtPlan& plan, const DenseVector& x);

// QA applied columnwise; A.rows() must equal m_orig, result is m_pad x cols.
DenseMatrix rht_apply_mat(const RhtPlan& plan, const DenseMatrix& a);

// Q A Q^T for symmetric positive definite A. Requires m_orig == m_pad:
// padding a PD matrix symmetrically would change its spectrum, so only
// power-of-two sizes are accepted here.
DenseMatrix rht_conjugate_pd(const RhtPlan& plan, const DenseMatrix& a);

// Q^T x for x of length m_pad; result truncated back to m_orig.
DenseVector rht_unapply_vec(const RhtPlan& plan, const DenseVector& x);

namespace detail {
// In-place unnormalized Walsh-Hadamard butterfly; len must be a power of two.
void fwht_pow2(double* x, index_t len);
// Same butterfly applied across the rows of a row-major rows x cols block.
void fwht_rows_pow2(double* data, index_t rows, index_t cols);
}  // namespace detail

}  // namespace tsap
