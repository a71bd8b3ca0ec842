#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spca/linalg.hpp"

namespace spca {

/// Parameter bundle realizing the main theorem's hypotheses:
/// eta = eps / (4 C p d^2) and T one past the larger of the two
/// thresholds. C defaults to 1; it is exposed as a knob because the
/// regime constant can be tightened for small eps.
struct TheoremParams {
    double eps = 0;
    double p = 0;
    std::size_t d = 0;
    double eta = 0;
    std::uint64_t T = 0;
    double C = 1.0;
};

TheoremParams theorem_params(double eps, double p, std::size_t d, double C = 1.0);

/// -(eps / 4p) (1 + 2 eta)^T, evaluated in log space. -inf when the
/// magnitude exceeds double range; pair with theorem_bound_log_abs.
double theorem_bound(const TheoremParams& tp);
double theorem_bound_log_abs(const TheoremParams& tp);

/// Exact E[B_t] transported through the one-step expectation map
///   B <- B + eta (A B + B A) + eta^2 d^2 diag(A diag(B) A)
/// from B_0 = (1 - eps) I - A. The stored matrix is value * exp(log_scale);
/// rescaling keeps entries in double range over long horizons.
struct PropagatedMoment {
    SymmetricMatrix value;
    std::uint64_t t = 0;
    double eps = 0;
    double eta = 0;
    double log_scale = 0;

    /// E[V_t] = w0^* E[B_t] w0 (+-inf if out of double range).
    double quadratic_form(const Vector& w0) const;
    /// log |E[V_t]| and its sign, overflow-safe.
    double log_abs_quadratic_form(const Vector& w0, int& sign) const;
};

PropagatedMoment propagate_EBT(const SymmetricMatrix& a, double eps, double eta,
                               std::uint64_t T);

/// Exact average of B_T over all d^(2T) entry sequences, by raw dense
/// conjugations with the rank-one factors. Independent of the
/// propagator's closed-form update; this is the oracle it is checked
/// against. Refuses instances with d^(2T) > 1e6.
Matrix brute_force_EBT(const SymmetricMatrix& a, double eps, double eta, unsigned T);

struct MonteCarloEVT {
    double mean = 0;
    double stderr_ = 0;
    std::uint64_t trials = 0;
};

/// Monte Carlo estimate of E[V_T]: each trial transports w0 through T
/// sampled rank-one factors (O(1) per step) and evaluates the quadratic
/// form at ((1-eps) I - A). Serial Welford reduction over per-trial RNG
/// streams, so the result is a pure function of the seed.
MonteCarloEVT estimate_EVT(const SymmetricMatrix& a, const Vector& w0, double eps, double eta,
                           std::uint64_t T, std::size_t trials, std::uint64_t seed);

/// One verified inequality (or identity): satisfied iff
/// lhs <= rhs + rel_slack * max(1, |rhs|).
struct BoundReport {
    std::string check;
    double lhs = 0;
    double rhs = 0;
    bool satisfied = false;
    std::string params;

    static BoundReport make(std::string check, double lhs, double rhs, std::string params,
                            double rel_slack = 1e-12);
};

/// Exact identity E[A_t^* X A_t] = d^2 diag(A diag(X) A). lhs of the
/// report is the entrywise deviation between the enumerated expectation
/// and the closed form; rhs is 0 (tolerance 1e-12 via the slack rule).
BoundReport check_esd(const SymmetricMatrix& a, const Matrix& x);

/// max_{s in [0,1]} (1+2 eta s)^T (1-eps-s) against the closed-form
/// bound 1 + (1+2 eta (1-eps))^T / (eta (T+1)). The max is taken on a
/// 1e5-interval grid plus the interior critical point.
BoundReport check_lk(double eta, double eps, std::uint64_t T);

struct NormDiagCoefficients {
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
    /// 1 + (eta^2 d^2 + 4 eta) / (1 - eta (eta d^2 + 2)); the uniform
    /// simplification of the three-coefficient bound.
    double simplified_bound = 0;
};

/// Closed-form coefficients of the diagonal-norm bound. Requires the
/// geometric series to converge: eta (eta d^2 + 2) < 1. T <= 2 yields
/// the empty-sum values alpha = beta = 0, gamma = 1.
NormDiagCoefficients norm_diag_coefficients(double eta, std::size_t d, std::uint64_t T);

/// Propagates E[B_t] exactly for t <= T_max and checks, at every step,
/// the three norm-evolution inequalities
///   |diag(B_t)|    <= 2 eta |B_{t-1}|_{1->2} + (1 + eta^2 d^2) |diag(B_{t-1})|
///   |B_t|_{1->2}   <= eta |B_{t-1}| + (1+eta) |B_{t-1}|_{1->2} + eta^2 d^2 |diag(B_{t-1})|
///   |B_t|          <= (1+2 eta) |B_{t-1}| + eta^2 d^2 |diag(B_{t-1})|
/// plus the aggregated 3x3-system envelope and the simplified uniform
/// diagonal bound. Five reports, each carrying its worst step.
std::vector<BoundReport> check_norm_system(const SymmetricMatrix& a, double eps, double eta,
                                           std::uint64_t T_max);

/// Full certification of the main expectation bound: measures the
/// w0-alignment against the leading eigenvector, validates 1/p below
/// it, builds (eta, T) from (eps, p, d), propagates E[B_T] exactly and
/// compares E[V_T] against the bound with 1e-9 relative slack.
BoundReport certify_theorem(const SymmetricMatrix& a, const Vector& w0, double eps, double p);

}  // namespace spca
