#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsap/generators.hpp"
#include "tsap/matrix.hpp"
#include "tsap/sketching.hpp"

namespace tsap {

enum class SolveMode { General, Pd, BlockKaczmarz };

// Momentum coefficients. The exact-projection schedule uses
// beta = 1 - sqrt(mu/nu); the inexact schedule backs off to
// beta = 1 - (3/4) sqrt(mu/nu). In both, gamma = 1/sqrt(mu nu) and
// alpha = 1/(1 + gamma nu).
struct AccelParams {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 1.0;
};

AccelParams accel_params(double mu_tilde, double nu_tilde, bool inexact);

struct SolverConfig {
  SolveMode mode = SolveMode::General;
  index_t k = 16;        // sketch size
  index_t s = 0;         // nonzeros per row; 0 = default ceil(ln^2 n)
  double mu_tilde = 0.0; // 0 = estimate (warm-up Monte Carlo or spectrum)
  double nu_tilde = 0.0;
  double eps = 1e-6;               // target relative residual
  index_t max_iters = 2'000'000;
  index_t residual_check_interval = 0;  // 0 = max(1, n/k)
  double inner_delta = 0.25;       // preconditioner failure probability
  std::uint64_t seed = 0;
  // Safety margins applied to warm-up moment estimates: mu~ = safety_mu *
  // mu^, nu~ = safety_nu * nu^. Under/over-estimating in this direction
  // preserves the convergence guarantee.
  double safety_mu = 0.5;
  double safety_nu = 2.0;
  index_t warmup_trials = 200;
  // Known spectrum enables the closed-form parameter fallback instead of the
  // Monte Carlo warm-up.
  std::optional<SpectrumSpec> spectrum;
};

struct SolveReport {
  DenseVector solution;
  std::vector<std::pair<index_t, double>> residual_history;  // (iter, ||Ax-b||/||b||)
  index_t iterations_used = 0;
  index_t inner_iteration_total = 0;
  double wall_time_sec = 0.0;
  bool converged = false;
  std::string diagnostic;
  AccelParams params_used;
  double mu_tilde_used = 0.0;
  double nu_tilde_used = 0.0;
  index_t k_used = 0;
  index_t s_used = 0;
};

// Recorded state of one iteration, for replay checks and rate fits.
struct IterateRecord {
  DenseVector x;
  DenseVector v;
  DenseVector y;
  DenseVector w;
  DenseVector x_next;
  DenseVector v_next;
};

// Optional test-harness hooks. error_history tracks ||x - x*|| (the A-norm
// of the error in PD mode) at every iteration when x_star is given.
struct SolverInstrumentation {
  const DenseVector* x_star = nullptr;
  index_t record_first = 0;  // record full iterate state for this many steps
  std::vector<IterateRecord> iterates;
  std::vector<double> error_history;
};

// Accelerated sketch-and-project (general: B = I after A <- QA; pd: B = QAQ^T
// with the solution mapped back by Q^T at the end). BlockKaczmarz mode runs
// the plain iteration with s=1 subsampling.
SolveReport solve(const DenseMatrix& a, const DenseVector& b, const SolverConfig& cfg,
                  SolverInstrumentation* instr = nullptr);

// Non-accelerated variant: x <- x - w each step, expected contraction 1-mu.
SolveReport solve_plain(const DenseMatrix& a, const DenseVector& b, const SolverConfig& cfg,
                        SolverInstrumentation* instr = nullptr);

// Sketch-size escalation: start at k0 = ceil(sqrt(n) ln n), l_q = ceil(2
// k_q/b) with b = 0.35 ln k_q, escalate k <- ceil(b k) until
// kappa_{l:2k} <= sqrt(n/k0) or kappa_l^2 <= kappa_{l0}; stops within two
// escalations (and never lets 2k exceed n).
struct SketchSizeChoice {
  index_t k = 0;
  index_t ell = 0;
  index_t escalations = 0;
};
SketchSizeChoice adaptive_sketch_size(const SpectrumSpec& spectrum, index_t n);

// Parameter helpers shared by the solver and the bench harness.
double default_nnz_per_row(index_t n);
// Closed-form mu~/nu~ from a known spectrum (Corollary-style bounds with
// c1 = 1/4, c2 = 4), at l = ceil(k / ln k).
std::pair<double, double> params_from_spectrum(const SpectrumSpec& spec, index_t k,
                                               bool pd_mode);

}  // namespace tsap
