#pragma once

#include <cstdint>

#include "tsap/matrix.hpp"

namespace tsap {

// Sketch-and-precondition factor for the wide system (Atil Atil^T) u = rhs:
// M = V Sigma^-1 from the compact SVD of Phi Atil^T, where Phi is a
// column-sparse sign embedding. Atil^T M is well conditioned with high
// probability, so PCG with M M^T as the preconditioner converges in O(log
// 1/tol) steps.
struct Preconditioner {
  DenseMatrix m;  // k x rank
  std::uint64_t built_from_seed = 0;
  index_t phi_rows = 0;
};

struct ProjectionResult {
  DenseVector w;  // lies in range(Atil^T) by construction
  DenseVector u;  // the k-dim multiplier; the PD solver scatters S^T u itself
  index_t inner_iterations = 0;
  double achieved_relative_error_bound = 0.0;
};

// Exact projection for the positive definite path: solves (SAS) u = rhs by
// jittered Cholesky and returns w = (SAs)^T u. Cholesky failure propagates
// as DegenerateSketch so the caller can resample.
ProjectionResult project_pd(const DenseMatrix& sas_rows, const DenseMatrix& sas,
                            const DenseVector& rhs);

// Phi has phi = 4k + 8*ceil(log2(1/delta)) rows and 8 nonzeros per column,
// entries +-1/sqrt(8). Throws DegenerateSketch if Phi Atil^T is rank
// deficient.
Preconditioner build_preconditioner(const DenseMatrix& atil, double delta,
                                    std::uint64_t seed);

// Test hook: Phi = I (phi = n), which whitens Atil^T exactly.
Preconditioner build_preconditioner_exact(const DenseMatrix& atil);

// PCG on (Atil Atil^T) u = rhs with the operator applied as Atil (Atil^T v);
// Atil Atil^T is never formed. Returns w = Atil^T u with
// ||w - w*|| <= tol ||w*|| when Atil^T M is well conditioned, and always
// ||w - w*|| <= 4 ||w*||: the G-norm error of CG is nonincreasing from the
// zero start, and the best iterate by preconditioned residual is returned
// (the zero vector if no iterate improved on it).
ProjectionResult project_pcg(const DenseMatrix& atil, const DenseVector& rhs,
                             const Preconditioner& pre, double tol, index_t cap);

// Projection accuracy demanded by the inexact-step analysis:
// mu~ / sqrt(8 (mu~ nu~ + 1)), using ||E[P]|| <= 1.
double required_projection_tol(double mu_tilde, double nu_tilde);

// Worst-case inner iteration budget before the 4||w*|| fallback applies.
index_t pcg_iteration_cap(double tol);

}  // namespace tsap
