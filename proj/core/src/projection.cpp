#include "tsap/projection.hpp"

#include <cmath>

#include "eigen_util.hpp"
#include "tsap/rng.hpp"

namespace tsap {

ProjectionResult project_pd(const DenseMatrix& sas_rows, const DenseMatrix& sas,
                            const DenseVector& rhs) {
  ProjectionResult out;
  out.u = cholesky_solve(sas, rhs);  // jitter escalation inside
  out.w = DenseVector(sas_rows.cols());
  view(out.w).noalias() = view(sas_rows).transpose() * view(out.u);
  return out;
}

namespace {

// M = V Sigma^-1 where U Sigma V^T is the compact SVD of B (tall phi x k).
// Computed through the k x k Gram matrix: B is well conditioned whenever the
// embedding worked, so squaring is harmless, and this is much cheaper than a
// direct SVD in the per-iteration path.
Preconditioner factor_from_embedded(const Eigen::MatrixXd& b, std::uint64_t seed,
                                    index_t phi_rows) {
  Eigen::MatrixXd gram = b.transpose() * b;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  if (eig.info() != Eigen::Success)
    throw NumericalError("build_preconditioner: eigensolver failed");
  const Eigen::VectorXd& w = eig.eigenvalues();  // ascending
  const index_t k = b.cols();
  const double cutoff = static_cast<double>(std::max<index_t>(phi_rows, k)) *
                        std::max(w(k - 1), 0.0) * 0x1.0p-46;
  index_t deficient = 0;
  while (deficient < k && w(deficient) <= cutoff) ++deficient;
  const index_t rank = k - deficient;
  if (rank < k)
    throw DegenerateSketch("build_preconditioner: Phi Atil^T rank deficient");
  Preconditioner pre;
  pre.built_from_seed = seed;
  pre.phi_rows = phi_rows;
  // Descending order to match the usual SVD convention.
  Eigen::MatrixXd m(k, rank);
  for (index_t j = 0; j < rank; ++j) {
    const index_t src = k - 1 - j;
    m.col(j) = eig.eigenvectors().col(src) / std::sqrt(w(src));
  }
  pre.m = to_matrix(m);
  return pre;
}

}  // namespace

Preconditioner build_preconditioner(const DenseMatrix& atil, double delta,
                                    std::uint64_t seed) {
  const index_t k = atil.rows(), n = atil.cols();
  if (k > n) throw std::invalid_argument("build_preconditioner: need k <= n");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("build_preconditioner: delta in (0,1)");
  const index_t phi =
      4 * k + 8 * static_cast<index_t>(std::ceil(std::log2(1.0 / delta)));
  // B = Phi Atil^T accumulated column-by-column: column c of Phi hits 8 rows
  // with signs +-1/sqrt(8), each adding a copy of row c of Atil^T.
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(phi, k);
  auto am = view(atil);
  CounterRng rng(seed);
  const double scale = 1.0 / std::sqrt(8.0);
  for (index_t c = 0; c < n; ++c) {
    for (int j = 0; j < 8; ++j) {
      const index_t r = static_cast<index_t>(rng.next_index(static_cast<std::uint64_t>(phi)));
      b.row(r) += (rng.next_sign() * scale) * am.col(c).transpose();
    }
  }
  return factor_from_embedded(b, seed, phi);
}

Preconditioner build_preconditioner_exact(const DenseMatrix& atil) {
  Eigen::MatrixXd b = view(atil).transpose();
  return factor_from_embedded(b, 0, atil.cols());
}

double required_projection_tol(double mu_tilde, double nu_tilde) {
  return mu_tilde / std::sqrt(8.0 * (mu_tilde * nu_tilde + 1.0));
}

index_t pcg_iteration_cap(double tol) {
  return 20 + static_cast<index_t>(std::ceil(10.0 * std::log(1.0 / tol)));
}

ProjectionResult project_pcg(const DenseMatrix& atil, const DenseVector& rhs,
                             const Preconditioner& pre, double tol, index_t cap) {
  const index_t k = atil.rows();
  if (rhs.len() != k) throw std::invalid_argument("project_pcg: rhs length mismatch");
  if (!(tol > 0.0)) throw std::invalid_argument("project_pcg: tol must be positive");

  auto am = view(atil);
  auto mm = view(pre.m);
  ProjectionResult out;
  out.w = DenseVector(atil.cols());

  Eigen::VectorXd r = view(rhs);
  if (r.norm() == 0.0) {
    out.achieved_relative_error_bound = 0.0;
    return out;  // w = 0 in 0 iterations
  }

  Eigen::VectorXd u = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd z = mm * (mm.transpose() * r);
  Eigen::VectorXd p = z;
  double rho = r.dot(z);
  const double rho0 = rho;
  Eigen::VectorXd best_u = u;
  double best_rho = rho;

  index_t it = 0;
  while (it < cap) {
    // q = Atil (Atil^T p); the k x k Gram matrix is never formed.
    Eigen::VectorXd q = am * (am.transpose() * p).eval();
    const double pq = p.dot(q);
    if (!(pq > 0.0)) break;  // null-space or roundoff breakdown
    const double alpha = rho / pq;
    u += alpha * p;
    r -= alpha * q;
    z = mm * (mm.transpose() * r);
    const double rho_next = r.dot(z);
    ++it;
    if (rho_next >= 0.0 && rho_next < best_rho) {
      best_rho = rho_next;
      best_u = u;
    }
    if (!(rho_next > 0.0) || std::sqrt(rho_next / rho0) <= tol / 3.0) break;
    p = z + (rho_next / rho) * p;
    rho = rho_next;
  }

  // Fall back to the best iterate by preconditioned residual; the zero
  // iterate (best_rho starts at rho0) already satisfies ||w-w*|| <= ||w*||,
  // which keeps the unconditional 4||w*|| guarantee regardless of M.
  out.inner_iterations = it;
  out.achieved_relative_error_bound = 3.0 * std::sqrt(std::max(best_rho, 0.0) / rho0);
  out.u = to_vector(best_u);
  view(out.w).noalias() = am.transpose() * best_u;
  return out;
}

}  // namespace tsap
