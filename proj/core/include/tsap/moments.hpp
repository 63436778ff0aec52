#pragma once

#include <cstdint>
#include <vector>

#include "tsap/generators.hpp"
#include "tsap/matrix.hpp"
#include "tsap/sketching.hpp"

namespace tsap {

// Monte Carlo estimate of the projection moments for P = (SA)^+ (SA):
// p_bar ~= E[P], mu_hat = lambda_min(p_bar), and (when requested)
// nu_hat = lambda_max of the averaged (p_bar^-1/2 P p_bar^-1/2)^2 computed
// from fresh randomness.
struct MomentEstimate {
  DenseMatrix p_bar;
  double mu_hat = 0.0;
  double nu_hat = 0.0;
  index_t trials = 0;
  SketchFamily family;
  double std_err_scale = 0.0;  // 1/sqrt(trials)
  index_t degenerate_skips = 0;
};

MomentEstimate estimate_pbar(const DenseMatrix& a, const SketchFamily& family,
                             index_t trials, std::uint64_t seed);

// Two-phase: phase 1 estimates p_bar, phase 2 with independent seeds
// averages the normalized squared projection. Throws NumericalError when
// p_bar is numerically singular (mu_hat <= 1e-8): increase k or trials.
double estimate_nu(const DenseMatrix& a, const SketchFamily& family,
                   index_t trials, std::uint64_t seed);

// Both phases, sharing the p_bar pass.
MomentEstimate estimate_moments(const DenseMatrix& a, const SketchFamily& family,
                                index_t trials, std::uint64_t seed);

// Fractions of trials with sigma_min^2(S Q A) >= c (2k sigma_{2k}^2 +
// sum_{i>2k} sigma_i^2), at c in {0.5, 0.1, 0.05}. Q and S are drawn fresh
// per trial.
struct SminReport {
  std::vector<double> c_values;
  std::vector<double> pass_fraction;
  double rhs_base = 0.0;          // 2k sigma_{2k}^2 + tail sum
  double median_smin_sq = 0.0;
  index_t trials = 0;
};

SminReport check_smin_bound(const DenseMatrix& a, const SketchFamily& family,
                            index_t trials, std::uint64_t seed);

// lambda = (1/ell) sum_{i>ell} sigma_i^2 and the diagonal of
// A^T A (A^T A + lambda I)^-1 in the right-singular basis.
struct ClosedFormRhs {
  double lambda = 0.0;
  std::vector<double> target_diag;
};

ClosedFormRhs closed_form_rhs(const SpectrumSpec& spectrum, index_t ell);

}  // namespace tsap
