#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tsap/matrix.hpp"

namespace tsap {

// Krylov baseline result. matvec_count excludes setup products:
// one A*p per CG iteration, one A*p plus one A^T*t per CGNE iteration.
struct KrylovReport {
  DenseVector solution;
  index_t iterations = 0;
  index_t matvec_count = 0;
  std::vector<std::pair<index_t, double>> residual_history;
  bool converged = false;
};

// Plain conjugate gradient (three-term recurrences, no restarts). Breakdown
// (p^T A p <= 0) signals a non-SPD input via NumericalError.
KrylovReport cg_solve(const DenseMatrix& a, const DenseVector& b, double eps,
                      index_t max_iters);

// CG on the normal equations A^T A x = A^T b via paired matvecs; the
// residual history tracks the original system.
KrylovReport cgne_solve(const DenseMatrix& a, const DenseVector& b, double eps,
                        index_t max_iters);

}  // namespace tsap
