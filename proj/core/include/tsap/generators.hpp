#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsap/matrix.hpp"

namespace tsap {

enum class SpectrumKind { Polydecay, Spiked, Flat, Custom };

// Prescribed singular-value (or eigenvalue, when pd) profile behind every
// synthetic instance. All condition-number diagnostics are computed from
// this, never re-estimated from the realized matrix.
struct SpectrumSpec {
  std::vector<double> sigma;  // strictly positive, nonincreasing
  SpectrumKind kind = SpectrumKind::Custom;
  double beta = 0.0;        // polydecay exponent
  index_t spikes = 0;       // spiked: number of leading values
  double spike_ratio = 1.0; // spiked: leading / trailing value
  bool pd = false;          // values are eigenvalues of an SPD matrix

  index_t n() const { return static_cast<index_t>(sigma.size()); }
};

struct TestInstance {
  DenseMatrix a;
  DenseVector b;
  DenseVector x_star;
  SpectrumSpec spectrum;
  std::uint64_t factor_seed = 0;
  std::uint64_t solution_seed = 0;
};

// sigma_i = i^-beta; A = U diag(sigma) V^T with Haar-ish orthogonal factors,
// or U diag(sigma) U^T when pd. b = A x_star for a random unit x_star.
TestInstance gen_polydecay(index_t n, double beta, std::uint64_t seed, bool pd);

// sigma_1..sigma_l = ratio, the rest = 1.
TestInstance gen_spiked(index_t n, index_t num_spikes, double spike_ratio,
                        std::uint64_t seed, bool pd);

// Instance with an arbitrary prescribed profile (sorted nonincreasing > 0).
TestInstance gen_custom(std::vector<double> sigma, std::uint64_t seed, bool pd);

struct CondNumbers {
  double kappa_ell = 1.0;        // sigma_ell / sigma_n
  double kappa_bar_ell_q = 1.0;  // rms of sigma_{ell+1..q} / sigma_q
  double kappa_tilde_ell_q = 1.0;// mean of lambda_{ell+1..q} / lambda_q
};

// ell, q are 1-based per the usual spectral indexing; 1 <= ell < q <= n.
CondNumbers cond_numbers(const SpectrumSpec& spec, index_t ell, index_t q);

// Haar orthogonal factor via QR of a Gaussian matrix (n <= 2048); larger
// sizes combine an RHT with a random permutation, which is cheaper and
// incoherent enough for these experiments.
DenseMatrix random_orthogonal(index_t n, std::uint64_t seed);

}  // namespace tsap
