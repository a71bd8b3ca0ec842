#include "spca/sampler.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spca/errors.hpp"

namespace spca {

RngStream::RngStream(uint64_t seed, uint64_t stream) {
    // Canonical pcg32 initialization: the increment selects the stream.
    inc_ = (stream << 1u) | 1u;
    state_ = 0u;
    next_u32();
    state_ += seed;
    next_u32();
}

uint32_t RngStream::next_u32() {
    const uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
    const uint32_t rot = static_cast<uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

uint64_t RngStream::next_u64() {
    const uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
}

std::size_t RngStream::uniform_below(std::size_t n) {
    const uint32_t bound = static_cast<uint32_t>(n);
    const uint32_t threshold = (0u - bound) % bound;
    for (;;) {
        const uint32_t r = next_u32();
        if (r >= threshold) return r % bound;
    }
}

double RngStream::uniform01() {
    const uint64_t a = next_u32() >> 5;   // 27 bits
    const uint64_t b = next_u32() >> 6;   // 26 bits
    return (static_cast<double>(a) * 67108864.0 + static_cast<double>(b)) *
           (1.0 / 9007199254740992.0);
}

double RngStream::gaussian() {
    double u1 = uniform01();
    const double u2 = uniform01();
    if (u1 <= 0.0) u1 = 1.0 / 9007199254740992.0;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

EntrySample sample_entry(const SymmetricMatrix& a, RngStream& rng) {
    const std::size_t d = a.dim();
    const std::size_t i = rng.uniform_below(d);
    const std::size_t j = rng.uniform_below(d);
    return {i, j, a(i, j)};
}

Matrix estimator_mean(const SymmetricMatrix& a) {
    const std::size_t d = a.dim();
    const double d2 = static_cast<double>(d) * static_cast<double>(d);
    Matrix sum(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) sum(i, j) += d2 * a(i, j);
    return (1.0 / d2) * sum;
}

TripletStream::TripletStream(const std::filesystem::path& path, StreamFormat format)
    : in_(path), path_(path.string()) {
    if (format != StreamFormat::triplet_text)
        throw PreconditionError("unsupported stream format");
    if (!in_) throw ParseError(path_, "cannot open");
    std::string header;
    if (!std::getline(in_, header)) throw ParseError(path_, 1, "missing header line");
    if (header.size() > 2 && header.compare(0, 2, "d=") == 0) {
        std::size_t d = 0;
        const char* first = header.data() + 2;
        const char* last = header.data() + header.size();
        auto [ptr, ec] = std::from_chars(first, last, d);
        if (ec == std::errc{} && ptr == last && d > 0) {
            d_ = d;
            return;
        }
    }
    throw ParseError(path_, 1, "header must be \"d=<positive int>\", got \"" + header + "\"");
}

std::optional<EntrySample> TripletStream::next() {
    std::string line;
    if (!std::getline(in_, line)) return std::nullopt;
    ++line_;
    std::istringstream ss(line);
    long long i1 = 0, j1 = 0;
    double value = 0;
    if (!(ss >> i1 >> j1 >> value))
        throw ParseError(path_, line_, "expected \"i j value\", got \"" + line + "\"");
    std::string rest;
    if (ss >> rest) throw ParseError(path_, line_, "trailing content \"" + rest + "\"");
    if (i1 < 1 || j1 < 1 || static_cast<std::size_t>(i1) > d_ ||
        static_cast<std::size_t>(j1) > d_)
        throw ParseError(path_, line_,
                         "index out of range for d=" + std::to_string(d_) + ": (" +
                             std::to_string(i1) + ", " + std::to_string(j1) + ")");
    return EntrySample{static_cast<std::size_t>(i1 - 1), static_cast<std::size_t>(j1 - 1),
                       value};
}

std::unique_ptr<EntrySource> stream_open(const std::filesystem::path& path,
                                         StreamFormat format) {
    return std::make_unique<TripletStream>(path, format);
}

void write_triplets(const std::filesystem::path& path, std::size_t d,
                    std::span<const EntrySample> samples) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ParseError(path.string(), "cannot open for writing");
    out << "d=" << d << "\n";
    out.precision(17);
    for (const EntrySample& s : samples)
        out << (s.i + 1) << " " << (s.j + 1) << " " << s.value << "\n";
    if (!out) throw ParseError(path.string(), "write failed");
}

}  // namespace spca
