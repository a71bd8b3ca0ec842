#include "spca/sgd.hpp"

#include <cmath>

#include "spca/errors.hpp"

namespace spca {

namespace {

constexpr double kDegenerateNorm = 1e-14;

double step_delta(double eta, std::size_t d, const EntrySample& s, double wj) {
    const double d2 = static_cast<double>(d) * static_cast<double>(d);
    return eta * d2 * s.value * wj;
}

}  // namespace

Iterate sgd_step(const Iterate& it, const EntrySample& s, std::size_t d) {
    if (!is_unit(it.w)) throw PreconditionError("sgd_step: iterate is not unit norm");
    Vector u = it.w;
    u[s.i] += step_delta(it.eta, d, s, it.w[s.j]);
    const double n = norm2(u);
    if (n < kDegenerateNorm)
        throw DegenerateStepError("sgd_step: pre-normalization norm " + std::to_string(n));
    for (double& x : u) x /= n;
    return {std::move(u), it.t + 1, it.eta};
}

Chain::Chain(Vector w0, double eta) : u_(std::move(w0)), eta_(eta) {
    if (!is_unit(u_)) throw PreconditionError("Chain: w0 is not unit norm");
    norm2_ = dot(u_, u_);
}

void Chain::renormalize() {
    const double n = norm2(u_);
    for (double& x : u_) x /= n;
    norm2_ = dot(u_, u_);
    steps_since_renorm_ = 0;
}

void Chain::step(const EntrySample& s) {
    const double old_ui = u_[s.i];
    const double delta = step_delta(eta_, dim(), s, u_[s.j]);
    u_[s.i] = old_ui + delta;
    const double new_norm2 = norm2_ + delta * (2.0 * old_ui + delta);
    if (!(new_norm2 > kDegenerateNorm * kDegenerateNorm * norm2_) ||
        !std::isfinite(new_norm2)) {
        // Either collapsed to numerical zero or the tracked norm lost
        // meaning; decide on the exactly recomputed value.
        const double exact = norm2(u_);
        if (!std::isfinite(exact) || exact * exact < kDegenerateNorm * kDegenerateNorm * norm2_)
            throw DegenerateStepError("chain step " + std::to_string(t_ + 1) +
                                      ": pre-normalization vector is numerically zero");
        norm2_ = exact * exact;
    } else {
        norm2_ = new_norm2;
    }
    ++t_;
    ++steps_since_renorm_;
    if (steps_since_renorm_ >= kRenormPeriod || norm2_ > 1e100 || norm2_ < 1e-100)
        renormalize();
}

Vector Chain::unit() const {
    Vector w = u_;
    const double n = norm2(w);
    for (double& x : w) x /= n;
    return w;
}

double rayleigh(const Vector& w, const SymmetricMatrix& a) {
    if (!is_unit(w)) throw PreconditionError("rayleigh: w is not unit norm");
    return dot(w, a.apply(w));
}

double alignment(const Vector& w, const Vector& v) {
    if (!is_unit(w) || !is_unit(v)) throw PreconditionError("alignment: inputs must be unit norm");
    return std::abs(dot(w, v));
}

namespace {

TraceRecord make_record(const Chain& chain, const RunOptions& opts) {
    TraceRecord r;
    r.t = chain.step_count();
    r.eta = chain.eta();
    if (opts.rayleigh_matrix || opts.oracle_v1) {
        const Vector w = chain.unit();
        if (opts.rayleigh_matrix) r.rayleigh = rayleigh(w, *opts.rayleigh_matrix);
        if (opts.oracle_v1) r.alignment = alignment(w, *opts.oracle_v1);
    }
    return r;
}

}  // namespace

RunResult run_fixed(EntrySource& source, const Vector& w0, double eta, std::uint64_t T,
                    const RunOptions& opts) {
    Chain chain(w0, eta);
    RunResult out;
    out.trace.push_back(make_record(chain, opts));
    const std::uint64_t stride = opts.trace_stride == 0 ? 1 : opts.trace_stride;

    out.stop = StopReason::step_cap;
    while (chain.step_count() < T) {
        const std::optional<EntrySample> s = source.next();
        if (!s) break;  // recorded stream exhausted: the data is the cap
        try {
            chain.step(*s);
        } catch (const DegenerateStepError&) {
            out.stop = StopReason::degenerate;
            break;
        }
        if (chain.step_count() % stride == 0 || chain.step_count() == T) {
            TraceRecord r = make_record(chain, opts);
            out.trace.push_back(r);
            if (opts.stop_alignment && r.alignment && *r.alignment >= *opts.stop_alignment) {
                out.stop = StopReason::tolerance_met;
                break;
            }
        }
    }
    if (out.trace.back().t != chain.step_count()) out.trace.push_back(make_record(chain, opts));
    out.final = chain.iterate();
    return out;
}

RunResult run_fixed(const SymmetricMatrix& a, const Vector& w0, double eta, std::uint64_t T,
                    RngStream rng, const RunOptions& opts) {
    MatrixSampler source(a, rng);
    return run_fixed(source, w0, eta, T, opts);
}

}  // namespace spca
