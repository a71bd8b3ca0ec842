#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spca/linalg.hpp"
#include "spca/sampler.hpp"

namespace spca {

/// A unit-norm candidate eigenvector with its step index and the rate
/// in effect.
struct Iterate {
    Vector w;
    std::uint64_t t = 0;
    double eta = 0;
};

struct TraceRecord {
    std::uint64_t t = 0;
    double eta = 0;
    std::optional<double> loss;
    std::optional<double> rayleigh;
    std::optional<double> alignment;
};

enum class StopReason { step_cap, tolerance_met, degenerate };

struct RunResult {
    Iterate final;
    std::vector<TraceRecord> trace;
    StopReason stop = StopReason::step_cap;
};

/// Full renormalization cadence for the incremental-norm fast path.
inline constexpr std::uint64_t kRenormPeriod = 1024;

/// One step of w' = normalize(w + eta * d^2 * value * w_j * e_i).
/// Reference implementation with a full O(d) renormalization; the loop
/// engine below is the amortized-O(1) equivalent.
Iterate sgd_step(const Iterate& it, const EntrySample& s, std::size_t d);

/// Loop engine for one chain. Stores the iterate unnormalized with a
/// tracked squared norm, so a step costs O(1): exactly one coordinate
/// changes, and the norm update follows from the old coordinate value.
/// A full O(d) renormalization runs every kRenormPeriod steps to wash
/// out tracking drift, plus whenever the scale leaves [1e-100, 1e100].
class Chain {
public:
    Chain(Vector w0, double eta);  // w0 must be unit norm (1e-12)

    /// Throws DegenerateStepError if the pre-normalization vector is
    /// numerically zero (relative norm below 1e-14).
    void step(const EntrySample& s);

    std::size_t dim() const { return u_.size(); }
    std::uint64_t step_count() const { return t_; }
    double eta() const { return eta_; }
    void set_eta(double eta) { eta_ = eta; }

    /// Materializes the unit-norm iterate (O(d), exact norm).
    Vector unit() const;
    Iterate iterate() const { return {unit(), t_, eta_}; }

    // Internals exposed for the drift invariant tests.
    double tracked_norm2() const { return norm2_; }
    const Vector& raw() const { return u_; }

private:
    void renormalize();

    Vector u_;
    double norm2_ = 1.0;
    double eta_ = 0;
    std::uint64_t t_ = 0;
    std::uint64_t steps_since_renorm_ = 0;
};

/// w^* A w for unit w; lies in [s_d, s_1].
double rayleigh(const Vector& w, const SymmetricMatrix& a);

/// |<w, v>| for unit vectors; absolute value because eigenvectors are
/// sign-ambiguous.
double alignment(const Vector& w, const Vector& v);

struct RunOptions {
    std::uint64_t trace_stride = 100;
    /// Stop early once alignment(w, *oracle_v1) reaches this value
    /// (checked at trace points).
    std::optional<double> stop_alignment;
    /// When set, trace rows carry the Rayleigh quotient.
    const SymmetricMatrix* rayleigh_matrix = nullptr;
    /// When set, trace rows carry alignment against this vector.
    const Vector* oracle_v1 = nullptr;
};

/// Applies the stochastic step T times, tracing every trace_stride
/// steps. A degenerate step stops the run with the partial trace kept.
/// An exhausted source (recorded stream shorter than T) stops at the
/// data cap.
RunResult run_fixed(EntrySource& source, const Vector& w0, double eta, std::uint64_t T,
                    const RunOptions& opts = {});
RunResult run_fixed(const SymmetricMatrix& a, const Vector& w0, double eta, std::uint64_t T,
                    RngStream rng, const RunOptions& opts = {});

}  // namespace spca
