#pragma once

#include <filesystem>

#include "spca/linalg.hpp"

namespace spca {

// Binary layout: magic "SYMPCA1\0", dimension as 64-bit little-endian
// unsigned, then d(d+1)/2 lower-triangle entries as 64-bit little-endian
// IEEE-754 doubles, row-major.
inline constexpr char kMatrixMagic[8] = {'S', 'Y', 'M', 'P', 'C', 'A', '1', '\0'};

void write_matrix(const std::filesystem::path& path, const SymmetricMatrix& a);
SymmetricMatrix read_matrix(const std::filesystem::path& path);

}  // namespace spca
