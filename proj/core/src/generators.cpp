#include "tsap/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eigen_util.hpp"
#include "tsap/rng.hpp"
#include "tsap/transforms.hpp"

namespace tsap {

namespace {

DenseMatrix haar_qr(index_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  Eigen::MatrixXd g(n, n);
  for (index_t i = 0; i < n; ++i)
    for (index_t j = 0; j < n; ++j) g(i, j) = rng.next_gaussian();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::VectorXd rd = qr.matrixQR().diagonal();
  for (index_t j = 0; j < n; ++j)
    if (rd(j) < 0) q.col(j) = -q.col(j);
  return to_matrix(q);
}

DenseMatrix rht_permutation_orthogonal(index_t n, std::uint64_t seed) {
  // Q_rht * P: cheap approximately-Haar factor for large n.
  RhtPlan plan = make_rht_plan(n, CounterRng::derive(seed, 1));
  if (plan.m_pad != n)
    throw std::invalid_argument("random_orthogonal: large-n path needs power-of-two n");
  std::vector<index_t> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), index_t{0});
  CounterRng rng(CounterRng::derive(seed, 2));
  for (index_t i = n - 1; i > 0; --i)
    std::swap(perm[static_cast<size_t>(i)],
              perm[static_cast<size_t>(rng.next_index(static_cast<std::uint64_t>(i + 1)))]);
  DenseMatrix p(n, n);
  for (index_t i = 0; i < n; ++i) p(i, perm[static_cast<size_t>(i)]) = 1.0;
  return rht_apply_mat(plan, p);
}

TestInstance build_instance(SpectrumSpec spec, std::uint64_t seed, bool pd) {
  const index_t n = spec.n();
  if (n < 1 || n > 4096) throw std::invalid_argument("generator: n out of range");
  for (index_t i = 0; i + 1 < n; ++i)
    if (spec.sigma[static_cast<size_t>(i)] < spec.sigma[static_cast<size_t>(i + 1)])
      throw std::invalid_argument("generator: spectrum must be nonincreasing");
  if (spec.sigma.back() <= 0.0)
    throw std::invalid_argument("generator: spectrum must be strictly positive");
  spec.pd = pd;

  TestInstance inst;
  inst.spectrum = spec;
  inst.factor_seed = CounterRng::derive(seed, 0xFAC);
  inst.solution_seed = CounterRng::derive(seed, 0x501);

  DenseMatrix u = random_orthogonal(n, inst.factor_seed);
  Eigen::MatrixXd a;
  if (pd) {
    a = view(u) * CMapVec(spec.sigma.data(), n).asDiagonal() * view(u).transpose();
    a = ((a + a.transpose()) * 0.5).eval();
  } else {
    DenseMatrix v = random_orthogonal(n, CounterRng::derive(inst.factor_seed, 7));
    a = view(u) * CMapVec(spec.sigma.data(), n).asDiagonal() * view(v).transpose();
  }
  inst.a = to_matrix(a);

  CounterRng rng(inst.solution_seed);
  Eigen::VectorXd xs(n);
  for (index_t i = 0; i < n; ++i) xs(i) = rng.next_gaussian();
  xs /= xs.norm();
  inst.x_star = to_vector(xs);
  inst.b = to_vector(a * xs);
  return inst;
}

}  // namespace

DenseMatrix random_orthogonal(index_t n, std::uint64_t seed) {
  if (n <= 2048) return haar_qr(n, seed);
  return rht_permutation_orthogonal(n, seed);
}

TestInstance gen_polydecay(index_t n, double beta, std::uint64_t seed, bool pd) {
  if (beta < 0.0) throw std::invalid_argument("gen_polydecay: beta must be >= 0");
  SpectrumSpec spec;
  spec.kind = beta == 0.0 ? SpectrumKind::Flat : SpectrumKind::Polydecay;
  spec.beta = beta;
  spec.sigma.resize(static_cast<size_t>(n));
  for (index_t i = 0; i < n; ++i)
    spec.sigma[static_cast<size_t>(i)] = std::pow(static_cast<double>(i + 1), -beta);
  return build_instance(std::move(spec), seed, pd);
}

TestInstance gen_spiked(index_t n, index_t num_spikes, double spike_ratio,
                        std::uint64_t seed, bool pd) {
  if (num_spikes < 0 || num_spikes >= n)
    throw std::invalid_argument("gen_spiked: need 0 <= spikes < n");
  if (spike_ratio < 1.0) throw std::invalid_argument("gen_spiked: ratio must be >= 1");
  SpectrumSpec spec;
  spec.kind = spike_ratio == 1.0 ? SpectrumKind::Flat : SpectrumKind::Spiked;
  spec.spikes = num_spikes;
  spec.spike_ratio = spike_ratio;
  spec.sigma.assign(static_cast<size_t>(n), 1.0);
  for (index_t i = 0; i < num_spikes; ++i) spec.sigma[static_cast<size_t>(i)] = spike_ratio;
  return build_instance(std::move(spec), seed, pd);
}

TestInstance gen_custom(std::vector<double> sigma, std::uint64_t seed, bool pd) {
  SpectrumSpec spec;
  spec.kind = SpectrumKind::Custom;
  spec.sigma = std::move(sigma);
  return build_instance(std::move(spec), seed, pd);
}

CondNumbers cond_numbers(const SpectrumSpec& spec, index_t ell, index_t q) {
  const index_t n = spec.n();
  if (ell < 1 || ell >= q || q > n) throw std::invalid_argument("cond_numbers: index bounds");
  const auto& s = spec.sigma;
  CondNumbers out;
  out.kappa_ell = s[static_cast<size_t>(ell - 1)] / s[static_cast<size_t>(n - 1)];
  const double sq = s[static_cast<size_t>(q - 1)];
  double sum_sq = 0.0, sum_lin = 0.0;
  for (index_t i = ell + 1; i <= q; ++i) {
    const double r = s[static_cast<size_t>(i - 1)] / sq;
    sum_sq += r * r;
    sum_lin += r;
  }
  const double denom = static_cast<double>(q - ell);
  out.kappa_bar_ell_q = std::sqrt(sum_sq / denom);
  out.kappa_tilde_ell_q = sum_lin / denom;
  return out;
}

}  // namespace tsap
