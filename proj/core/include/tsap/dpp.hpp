#pragma once

#include <cstdint>
#include <vector>

#include "tsap/matrix.hpp"

namespace tsap {

// One draw from the desk-scale DPP samplers. `subset` is sorted;
// `bernoulli_mask` records which singular directions were kept by the
// random-size step; `rejection_draws` counts every proposal consumed by the
// projection sampler (so rejection_draws >= subset size).
struct DppSample {
  std::vector<index_t> subset;
  std::vector<std::uint8_t> bernoulli_mask;
  index_t rejection_draws = 0;
};

// Sample from DPP((1/lambda) A A^T): Bernoulli-select singular directions of
// A/sqrt(lambda) with probability sigma_i^2/(sigma_i^2 + lambda), then run
// the projection sampler on the kept left singular vectors with exact
// leverage proposals.
DppSample sample_dpp(const DenseMatrix& a, double lambda, std::uint64_t seed);

// Per-step diagnostics for tests (Z idempotency and trace after each
// elimination).
struct PdppDiagnostics {
  std::vector<double> z_idempotency;
  std::vector<double> z_trace;
};

// Projection DPP over the row span of U (m x ell, orthonormal columns),
// by rejection sampling from the proposal q. Requires ||u_i||^2 <= R ell q_i
// for all rows and q summing to 1. The elimination update
// Z <- Z - Z u u^T Z / (u^T Z u) is applied after each acceptance.
DppSample sample_pdpp(const DenseMatrix& u, const std::vector<double>& q, double big_r,
                      std::uint64_t seed, PdppDiagnostics* diag = nullptr);

struct DppVerifyReport {
  bool exact_path = false;
  double exact_max_abs_err = 0.0;   // exact enumeration vs closed form
  double mc_max_sigma_ratio = 0.0;  // max |delta| / stderr over entries
  index_t trials = 0;
  bool pass = false;
};

// Checks E[(SA)^+ SA] = A^T A (A^T A + lambda I)^-1: by 2^m enumeration when
// m <= 16 and n <= 8, and by Monte Carlo with the Algorithm-2 sampler
// otherwise (entrywise within 4 standard errors).
DppVerifyReport verify_expectation_formula(const DenseMatrix& a, double lambda,
                                           index_t trials, std::uint64_t seed);

struct RejectionStats {
  std::vector<index_t> draws;  // per-sample totals
  double median = 0.0;
  double p99 = 0.0;
  double envelope = 0.0;  // 4 R ell ln(100 ell)
  bool pass = false;
};

RejectionStats rejection_complexity_probe(const DenseMatrix& u, const std::vector<double>& q,
                                          double big_r, index_t trials, std::uint64_t seed);

// Exact-enumeration oracles (test support; exponential cost, desk scale).
DenseMatrix enumerate_dpp_expectation(const DenseMatrix& a, double lambda);
// Law of P-DPP(U U^T) over all C(m, ell) subsets; returns (subsets, probs).
std::pair<std::vector<std::vector<index_t>>, std::vector<double>>
enumerate_pdpp_law(const DenseMatrix& u);

}  // namespace tsap
