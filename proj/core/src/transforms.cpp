#include "tsap/transforms.hpp"

#include <bit>
#include <cmath>

#include "eigen_util.hpp"
#include "tsap/rng.hpp"

namespace tsap {

namespace detail {

void fwht_pow2(double* x, index_t len) {
  for (index_t h = 1; h < len; h <<= 1) {
    for (index_t i = 0; i < len; i += h << 1) {
      for (index_t j = i; j < i + h; ++j) {
        const double a = x[j];
        const double b = x[j + h];
        x[j] = a + b;
        x[j + h] = a - b;
      }
    }
  }
}

void fwht_rows_pow2(double* data, index_t rows, index_t cols) {
  // Same butterfly, vectorized across each row pair.
  MapMat m(data, rows, cols);
  for (index_t h = 1; h < rows; h <<= 1) {
    for (index_t i = 0; i < rows; i += h << 1) {
      for (index_t j = i; j < i + h; ++j) {
        auto a = m.row(j);
        auto b = m.row(j + h);
        for (index_t c = 0; c < cols; ++c) {
          const double s = a(c), t = b(c);
          a(c) = s + t;
          b(c) = s - t;
        }
      }
    }
  }
}

}  // namespace detail

RhtPlan make_rht_plan(index_t m_orig, std::uint64_t seed) {
  if (m_orig < 1) throw std::invalid_argument("make_rht_plan: m must be positive");
  RhtPlan plan;
  plan.m_orig = m_orig;
  plan.m_pad = static_cast<index_t>(std::bit_ceil(static_cast<std::uint64_t>(m_orig)));
  plan.seed = seed;
  plan.signs.resize(static_cast<size_t>(plan.m_pad));
  CounterRng rng(seed);
  for (auto& s : plan.signs) s = rng.next_sign();
  return plan;
}

DenseVector rht_apply_vec(const RhtPlan& plan, const DenseVector& x) {
  if (x.len() != plan.m_orig) throw std::invalid_argument("rht_apply_vec: length mismatch");
  DenseVector out(plan.m_pad);
  for (index_t i = 0; i < plan.m_orig; ++i) out[i] = plan.signs[static_cast<size_t>(i)] * x[i];
  detail::fwht_pow2(out.data(), plan.m_pad);
  const double scale = 1.0 / std::sqrt(static_cast<double>(plan.m_pad));
  view(out) *= scale;
  return out;
}

DenseMatrix rht_apply_mat(const RhtPlan& plan, const DenseMatrix& a) {
  if (a.rows() != plan.m_orig) throw std::invalid_argument("rht_apply_mat: dimension mismatch");
  DenseMatrix out(plan.m_pad, a.cols());
  for (index_t i = 0; i < plan.m_orig; ++i) {
    const double s = plan.signs[static_cast<size_t>(i)];
    for (index_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  }
  detail::fwht_rows_pow2(out.data(), plan.m_pad, out.cols());
  view(out) *= 1.0 / std::sqrt(static_cast<double>(plan.m_pad));
  return out;
}

DenseMatrix rht_conjugate_pd(const RhtPlan& plan, const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("rht_conjugate_pd: matrix not square");
  if (a.rows() != plan.m_orig) throw std::invalid_argument("rht_conjugate_pd: dimension mismatch");
  if (plan.m_orig != plan.m_pad)
    throw std::invalid_argument("rht_conjugate_pd: PD path requires a power-of-two dimension");
  const index_t n = plan.m_orig;
  // Q A Q^T = (1/n) H (D A D) H applied as row then column butterflies.
  DenseMatrix b(n, n);
  for (index_t i = 0; i < n; ++i)
    for (index_t j = 0; j < n; ++j)
      b(i, j) = plan.signs[static_cast<size_t>(i)] * a(i, j) * plan.signs[static_cast<size_t>(j)];
  detail::fwht_rows_pow2(b.data(), n, n);
  // Column butterfly == row butterfly of the transpose; work in place.
  DenseMatrix bt(n, n);
  view(bt) = view(b).transpose();
  detail::fwht_rows_pow2(bt.data(), n, n);
  // bt now holds H (D A D) H = n Q A Q^T, symmetric up to roundoff.
  DenseMatrix out(n, n);
  view(out) = (view(bt).transpose() + view(bt)) * (0.5 / static_cast<double>(n));
  return out;
}

DenseVector rht_unapply_vec(const RhtPlan& plan, const DenseVector& x) {
  if (x.len() != plan.m_pad) throw std::invalid_argument("rht_unapply_vec: length mismatch");
  // Q^T = D H / sqrt(m_pad) since H is symmetric.
  std::vector<double> work(x.data(), x.data() + plan.m_pad);
  detail::fwht_pow2(work.data(), plan.m_pad);
  const double scale = 1.0 / std::sqrt(static_cast<double>(plan.m_pad));
  DenseVector out(plan.m_orig);
  for (index_t i = 0; i < plan.m_orig; ++i)
    out[i] = plan.signs[static_cast<size_t>(i)] * work[static_cast<size_t>(i)] * scale;
  return out;
}

}  // namespace tsap
