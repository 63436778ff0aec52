#pragma once

#include <cstdint>
#include <vector>

#include "tsap/matrix.hpp"

namespace tsap {

enum class SketchKind { LessUniform, Subsample, Gaussian };

// Which sketching distribution to draw from. `s` is the number of nonzeros
// per row and only applies to LESS-uniform; Subsample is the s=1
// specialization with all-positive signs (same row pattern law).
struct SketchFamily {
  SketchKind kind = SketchKind::LessUniform;
  index_t k = 1;
  index_t s = 1;

  static SketchFamily less(index_t k, index_t s) { return {SketchKind::LessUniform, k, s}; }
  static SketchFamily subsample(index_t k) { return {SketchKind::Subsample, k, 1}; }
  static SketchFamily gaussian(index_t k) { return {SketchKind::Gaussian, k, 0}; }
};

// One realized k x m LESS-uniform sketch: row i is
//   sqrt(m/s) * sum_j signs[i,j] e_{indices[i,j]}^T,
// indices drawn uniformly with replacement (collisions sum).
struct LessSketch {
  index_t k = 0;
  index_t m = 0;
  index_t s = 0;
  std::vector<std::uint32_t> indices;  // k*s, row-major
  std::vector<float> signs;            // k*s, +-1
  double scale = 1.0;                  // sqrt(m/s)
  std::uint64_t seed = 0;

  DenseMatrix dense() const;
};

// A realized sketch of either family.
struct Sketch {
  SketchKind kind = SketchKind::LessUniform;
  LessSketch less;       // valid unless kind == Gaussian
  DenseMatrix gaussian;  // valid when kind == Gaussian
};

Sketch sample_sketch(const SketchFamily& family, index_t m, std::uint64_t seed);

// S*A via row gathers for sparse kinds (cost O(k n s)), dense product for
// Gaussian. Equals the dense materialization exactly up to float roundoff.
DenseMatrix apply_sketch(const Sketch& sketch, const DenseMatrix& a);
DenseVector apply_sketch_vec(const Sketch& sketch, const DenseVector& x);

}  // namespace tsap
