#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <span>

#include "spca/linalg.hpp"

namespace spca {

/// One observed matrix entry. Indices are 0-based in memory; the triplet
/// text format uses 1-based indices. The d^2 scale of the estimator is
/// applied at use sites, never stored.
struct EntrySample {
    std::size_t i = 0;
    std::size_t j = 0;
    double value = 0;
};

/// PCG32 with stream selection. Integer state only, so sequences are
/// identical across platforms for a fixed (seed, stream); distinct
/// stream indices give distinct sequences from one master seed.
class RngStream {
public:
    explicit RngStream(uint64_t seed, uint64_t stream = 0);

    uint32_t next_u32();
    uint64_t next_u64();
    /// Unbiased uniform draw from {0, ..., n-1} by rejection.
    std::size_t uniform_below(std::size_t n);
    /// 53-bit uniform in [0, 1).
    double uniform01();
    /// Standard normal via Box-Muller (consumes two uniforms per call).
    double gaussian();

private:
    uint64_t state_;
    uint64_t inc_;
};

EntrySample sample_entry(const SymmetricMatrix& a, RngStream& rng);

/// (1/d^2) * sum over all cells of d^2 A_ij e_i e_j^*, by literal
/// enumeration. Equals A entrywise; the unbiasedness check.
Matrix estimator_mean(const SymmetricMatrix& a);

/// Anything that can feed entry samples to a solver chain.
class EntrySource {
public:
    virtual ~EntrySource() = default;
    virtual std::size_t dim() const = 0;
    /// nullopt means the source is exhausted (never happens for matrix
    /// sampling; happens at end-of-file for recorded streams).
    virtual std::optional<EntrySample> next() = 0;
};

/// Uniform i.i.d. sampling of a stored matrix's cells, with replacement,
/// ordered pairs. Infinite source.
class MatrixSampler final : public EntrySource {
public:
    MatrixSampler(const SymmetricMatrix& a, RngStream rng) : a_(&a), rng_(rng) {}
    std::size_t dim() const override { return a_->dim(); }
    std::optional<EntrySample> next() override { return sample_entry(*a_, rng_); }

private:
    const SymmetricMatrix* a_;
    RngStream rng_;
};

enum class StreamFormat { triplet_text };

/// Replays a recorded entry stream from a triplet text file:
/// header line "d=<int>", then lines "i j value", 1-based indices.
class TripletStream final : public EntrySource {
public:
    TripletStream(const std::filesystem::path& path, StreamFormat format);
    std::size_t dim() const override { return d_; }
    std::optional<EntrySample> next() override;

private:
    std::ifstream in_;
    std::string path_;
    std::size_t d_ = 0;
    std::size_t line_ = 1;  // header consumed in constructor
};

std::unique_ptr<EntrySource> stream_open(const std::filesystem::path& path,
                                         StreamFormat format = StreamFormat::triplet_text);

/// Writes the triplet text format (test fixtures, recorded runs).
void write_triplets(const std::filesystem::path& path, std::size_t d,
                    std::span<const EntrySample> samples);

}  // namespace spca
