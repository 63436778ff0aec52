#include "tsap/sketching.hpp"

#include <cmath>

#include "eigen_util.hpp"
#include "tsap/rng.hpp"

namespace tsap {

DenseMatrix LessSketch::dense() const {
  DenseMatrix out(k, m);
  for (index_t i = 0; i < k; ++i)
    for (index_t j = 0; j < s; ++j)
      out(i, static_cast<index_t>(indices[static_cast<size_t>(i * s + j)])) +=
          scale * static_cast<double>(signs[static_cast<size_t>(i * s + j)]);
  return out;
}

Sketch sample_sketch(const SketchFamily& family, index_t m, std::uint64_t seed) {
  if (family.k < 1 || m < 1) throw std::invalid_argument("sample_sketch: invalid sizes");
  Sketch out;
  out.kind = family.kind;
  CounterRng rng(seed);
  if (family.kind == SketchKind::Gaussian) {
    out.gaussian = DenseMatrix(family.k, m);
    for (index_t i = 0; i < family.k; ++i)
      for (index_t j = 0; j < m; ++j) out.gaussian(i, j) = rng.next_gaussian();
    return out;
  }
  const index_t s = (family.kind == SketchKind::Subsample) ? 1 : family.s;
  if (s < 1 || s > m) throw std::invalid_argument("sample_sketch: need 1 <= s <= m");
  LessSketch& ls = out.less;
  ls.k = family.k;
  ls.m = m;
  ls.s = s;
  ls.seed = seed;
  ls.scale = std::sqrt(static_cast<double>(m) / static_cast<double>(s));
  ls.indices.resize(static_cast<size_t>(family.k * s));
  ls.signs.resize(static_cast<size_t>(family.k * s));
  for (size_t t = 0; t < ls.indices.size(); ++t) {
    ls.indices[t] = static_cast<std::uint32_t>(rng.next_index(static_cast<std::uint64_t>(m)));
    ls.signs[t] = (family.kind == SketchKind::Subsample)
                      ? 1.0f
                      : static_cast<float>(rng.next_sign());
  }
  return out;
}

DenseMatrix apply_sketch(const Sketch& sketch, const DenseMatrix& a) {
  if (sketch.kind == SketchKind::Gaussian) {
    if (a.rows() != sketch.gaussian.cols())
      throw std::invalid_argument("apply_sketch: dimension mismatch");
    DenseMatrix out(sketch.gaussian.rows(), a.cols());
    view(out).noalias() = view(sketch.gaussian) * view(a);
    return out;
  }
  const LessSketch& ls = sketch.less;
  if (a.rows() != ls.m) throw std::invalid_argument("apply_sketch: dimension mismatch");
  DenseMatrix out(ls.k, a.cols());
  auto am = view(a);
  auto om = view(out);
  for (index_t i = 0; i < ls.k; ++i) {
    auto row = om.row(i);
    for (index_t j = 0; j < ls.s; ++j) {
      const size_t t = static_cast<size_t>(i * ls.s + j);
      row += static_cast<double>(ls.signs[t]) * am.row(static_cast<index_t>(ls.indices[t]));
    }
    row *= ls.scale;
  }
  return out;
}

DenseVector apply_sketch_vec(const Sketch& sketch, const DenseVector& x) {
  if (sketch.kind == SketchKind::Gaussian) {
    if (x.len() != sketch.gaussian.cols())
      throw std::invalid_argument("apply_sketch_vec: dimension mismatch");
    DenseVector out(sketch.gaussian.rows());
    view(out).noalias() = view(sketch.gaussian) * view(x);
    return out;
  }
  const LessSketch& ls = sketch.less;
  if (x.len() != ls.m) throw std::invalid_argument("apply_sketch_vec: dimension mismatch");
  DenseVector out(ls.k);
  for (index_t i = 0; i < ls.k; ++i) {
    double acc = 0.0;
    for (index_t j = 0; j < ls.s; ++j) {
      const size_t t = static_cast<size_t>(i * ls.s + j);
      acc += static_cast<double>(ls.signs[t]) * x[static_cast<index_t>(ls.indices[t])];
    }
    out[i] = acc * ls.scale;
  }
  return out;
}

}  // namespace tsap
