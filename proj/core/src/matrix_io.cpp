#include "spca/matrix_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "spca/errors.hpp"

namespace spca {

namespace {

static_assert(sizeof(double) == 8 && std::numeric_limits<double>::is_iec559);

uint64_t to_le(uint64_t x) {
    if constexpr (std::endian::native == std::endian::little) return x;
    uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r = (r << 8) | ((x >> (8 * i)) & 0xff);
    return r;
}

}  // namespace

void write_matrix(const std::filesystem::path& path, const SymmetricMatrix& a) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError(path.string(), "cannot open for writing");
    out.write(kMatrixMagic, 8);
    const uint64_t d = to_le(a.dim());
    out.write(reinterpret_cast<const char*>(&d), 8);
    for (double x : a.triangle()) {
        uint64_t bits;
        std::memcpy(&bits, &x, 8);
        bits = to_le(bits);
        out.write(reinterpret_cast<const char*>(&bits), 8);
    }
    if (!out) throw ParseError(path.string(), "write failed");
}

SymmetricMatrix read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), "cannot open");
    char magic[8];
    if (!in.read(magic, 8) || std::memcmp(magic, kMatrixMagic, 8) != 0)
        throw ParseError(path.string(), "bad magic; not a SYMPCA1 matrix file");
    uint64_t d_le;
    if (!in.read(reinterpret_cast<char*>(&d_le), 8))
        throw ParseError(path.string(), "truncated header");
    const uint64_t d = to_le(d_le);
    if (d == 0 || d > (1u << 20))
        throw ParseError(path.string(), "implausible dimension " + std::to_string(d));
    SymmetricMatrix a(static_cast<std::size_t>(d));
    for (double& x : a.triangle()) {
        uint64_t bits;
        if (!in.read(reinterpret_cast<char*>(&bits), 8))
            throw ParseError(path.string(), "truncated entries");
        bits = to_le(bits);
        std::memcpy(&x, &bits, 8);
    }
    char extra;
    if (in.read(&extra, 1)) throw ParseError(path.string(), "trailing bytes after entries");
    return a;
}

}  // namespace spca
