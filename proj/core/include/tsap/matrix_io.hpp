#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsap/matrix.hpp"

namespace tsap {

// "TSAP" matrix container: magic, u16 version, u16 flags (bit0 = pd,
// bit1 = has_spectrum), u32 rows, u32 cols, row-major little-endian f64
// payload, optional spectrum block (u32 count + f64 values), CRC32 trailer
// over everything before it.
struct MatrixFileFlags {
  bool pd = false;
  bool has_spectrum = false;
};

struct MatrixFileContents {
  DenseMatrix matrix;
  MatrixFileFlags flags;
  std::optional<std::vector<double>> spectrum;
};

void write_matrix_file(const std::string& path, const DenseMatrix& a,
                       MatrixFileFlags flags,
                       const std::optional<std::vector<double>>& spectrum);

// Throws NumericalError on bad magic, version, size mismatch, or checksum.
MatrixFileContents read_matrix_file(const std::string& path);

std::uint32_t crc32_ieee(const unsigned char* data, std::size_t len,
                         std::uint32_t seed = 0);

}  // namespace tsap
