#include "spca/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spca/errors.hpp"

namespace spca {

double dot(const Vector& a, const Vector& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vector& v) { return std::sqrt(dot(v, v)); }

Vector normalized(const Vector& v) {
    double n = norm2(v);
    if (!(n > 0) || !std::isfinite(n))
        throw PreconditionError("cannot normalize a zero or non-finite vector");
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
    return out;
}

bool is_unit(const Vector& v, double tol) { return std::abs(norm2(v) - 1.0) <= tol; }

void axpy(double c, const Vector& x, Vector& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

Matrix Matrix::identity(std::size_t d) {
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(d_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::max_abs_diff(const Matrix& a, const Matrix& b) {
    double m = 0;
    for (std::size_t k = 0; k < a.a_.size(); ++k)
        m = std::max(m, std::abs(a.a_[k] - b.a_[k]));
    return m;
}

double Matrix::max_abs() const {
    double m = 0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    const std::size_t d = a.dim();
    Matrix c(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < d; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix operator*(double c, const Matrix& a) {
    Matrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = c * a(i, j);
    return out;
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t d) {
    SymmetricMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m.lower(i, i) = 1.0;
    return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(const Vector& entries) {
    SymmetricMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.lower(i, i) = entries[i];
    return m;
}

SymmetricMatrix SymmetricMatrix::from_lower_of(const Matrix& m) {
    SymmetricMatrix s(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j <= i; ++j) s.lower(i, j) = m(i, j);
    return s;
}

SymmetricMatrix SymmetricMatrix::symmetrized(const Matrix& m) {
    SymmetricMatrix s(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j <= i; ++j) s.lower(i, j) = 0.5 * (m(i, j) + m(j, i));
    return s;
}

Vector SymmetricMatrix::diag() const {
    Vector v(d_);
    for (std::size_t i = 0; i < d_; ++i) v[i] = (*this)(i, i);
    return v;
}

Matrix SymmetricMatrix::to_dense() const {
    Matrix m(d_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

Vector SymmetricMatrix::apply(const Vector& x) const {
    Vector y(d_, 0.0);
    for (std::size_t i = 0; i < d_; ++i) {
        double s = 0;
        for (std::size_t j = 0; j < d_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

void SymmetricMatrix::scale(double c) {
    for (double& x : tri_) x *= c;
}

double SymmetricMatrix::max_abs() const {
    double m = 0;
    for (double x : tri_) m = std::max(m, std::abs(x));
    return m;
}

double SymmetricMatrix::max_abs_diff(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    double m = 0;
    for (std::size_t k = 0; k < a.tri_.size(); ++k)
        m = std::max(m, std::abs(a.tri_[k] - b.tri_[k]));
    return m;
}

namespace {

// One cyclic Jacobi pass over the dense working copy; returns the
// off-diagonal Frobenius mass after the pass.
double jacobi_sweep(std::vector<double>& a, std::vector<double>& v, std::size_t d) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * d + j]; };
    for (std::size_t p = 0; p + 1 < d; ++p) {
        for (std::size_t q = p + 1; q < d; ++q) {
            const double apq = at(p, q);
            if (apq == 0.0) continue;
            const double app = at(p, p), aqq = at(q, q);
            const double tau = (aqq - app) / (2.0 * apq);
            const double t = (tau >= 0 ? 1.0 : -1.0) /
                             (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            for (std::size_t k = 0; k < d; ++k) {
                const double akp = at(k, p), akq = at(k, q);
                at(k, p) = c * akp - s * akq;
                at(k, q) = s * akp + c * akq;
            }
            for (std::size_t k = 0; k < d; ++k) {
                const double apk = at(p, k), aqk = at(q, k);
                at(p, k) = c * apk - s * aqk;
                at(q, k) = s * apk + c * aqk;
            }
            for (std::size_t k = 0; k < d; ++k) {
                const double vkp = v[k * d + p], vkq = v[k * d + q];
                v[k * d + p] = c * vkp - s * vkq;
                v[k * d + q] = s * vkp + c * vkq;
            }
        }
    }
    double off = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) off += at(i, j) * at(i, j);
    return off;
}

}  // namespace

EigenDecomposition eig_all(const SymmetricMatrix& m) {
    const std::size_t d = m.dim();
    if (d == 0) return {};
    std::vector<double> a(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a[i * d + j] = m(i, j);
    std::vector<double> v(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) v[i * d + i] = 1.0;

    double frob = 0;
    for (double x : a) frob += x * x;
    const double stop = frob * 1e-30 + 1e-300;

    constexpr int kMaxSweeps = 64;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (jacobi_sweep(a, v, d) <= stop) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw ConvergenceError("jacobi eigensolver: off-diagonal mass left after sweep cap");

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a[x * d + x] > a[y * d + y]; });

    EigenDecomposition out;
    out.values.resize(d);
    out.vectors.assign(d, Vector(d));
    for (std::size_t k = 0; k < d; ++k) {
        const std::size_t c = order[k];
        out.values[k] = a[c * d + c];
        for (std::size_t i = 0; i < d; ++i) out.vectors[k][i] = v[i * d + c];
    }
    return out;
}

namespace {

// Lanczos with full reorthogonalization; Ritz pairs from Jacobi on the
// projected tridiagonal (built dense; m stays small).
ExtremeEigen lanczos_extremes(const SymmetricMatrix& a, std::size_t m, double tol) {
    const std::size_t d = a.dim();
    m = std::min(m, d);
    std::vector<Vector> q;
    q.reserve(m);
    q.push_back(Vector(d, 1.0 / std::sqrt(static_cast<double>(d))));

    std::vector<double> alpha, beta;
    for (std::size_t k = 0; k < m; ++k) {
        Vector w = a.apply(q[k]);
        const double ak = dot(w, q[k]);
        alpha.push_back(ak);
        axpy(-ak, q[k], w);
        if (k > 0) axpy(-beta[k - 1], q[k - 1], w);
        for (const Vector& qi : q) axpy(-dot(w, qi), qi, w);   // full reorthogonalization
        const double bk = norm2(w);
        if (bk < 1e-14 || k + 1 == m) break;
        beta.push_back(bk);
        for (double& x : w) x /= bk;
        q.push_back(std::move(w));
    }

    const std::size_t n = alpha.size();
    SymmetricMatrix tri(n);
    for (std::size_t i = 0; i < n; ++i) {
        tri.lower(i, i) = alpha[i];
        if (i > 0) tri.lower(i, i - 1) = beta[i - 1];
    }
    EigenDecomposition ritz = eig_all(tri);

    ExtremeEigen out;
    out.s_max = ritz.values.front();
    out.s_min = ritz.values.back();
    out.v_max.assign(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) axpy(ritz.vectors.front()[i], q[i], out.v_max);
    out.v_max = normalized(out.v_max);

    const double scale = std::max({std::abs(out.s_max), std::abs(out.s_min), 1e-300});
    Vector r = a.apply(out.v_max);
    axpy(-out.s_max, out.v_max, r);
    if (norm2(r) > tol * scale) throw ConvergenceError("lanczos: top Ritz residual too large");

    Vector v_min(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) axpy(ritz.vectors.back()[i], q[i], v_min);
    v_min = normalized(v_min);
    Vector r2 = a.apply(v_min);
    axpy(-out.s_min, v_min, r2);
    if (norm2(r2) > tol * scale) throw ConvergenceError("lanczos: bottom Ritz residual too large");
    return out;
}

}  // namespace

ExtremeEigen extreme_eigenvalues(const SymmetricMatrix& a, double tol) {
    const std::size_t d = a.dim();
    if (d == 0) throw PreconditionError("extreme_eigenvalues: empty matrix");
    if (d <= 64) {
        EigenDecomposition e = eig_all(a);
        return {e.values.front(), e.values.back(), e.vectors.front()};
    }
    for (std::size_t m = 96; ; m *= 2) {
        try {
            return lanczos_extremes(a, m, tol);
        } catch (const ConvergenceError&) {
            if (m >= d) throw;
        }
        if (m >= d) break;
    }
    throw ConvergenceError("extreme_eigenvalues: no convergence at full subspace size");
}

SymmetricMatrix spectral_normalize(const SymmetricMatrix& a) {
    if (a.max_abs() == 0.0) throw NormalizeError("spectral_normalize: zero matrix");
    ExtremeEigen e = extreme_eigenvalues(a);
    if (!(e.s_max > 0))
        throw NormalizeError("spectral_normalize: leading eigenvalue is not positive (s_1 = " +
                             std::to_string(e.s_max) + ")");
    if (std::abs(e.s_min) > e.s_max)
        throw NormalizeError("spectral_normalize: |s_d| = " + std::to_string(std::abs(e.s_min)) +
                             " exceeds s_1 = " + std::to_string(e.s_max) +
                             "; scaling cannot make s_1 = |A| = 1");
    SymmetricMatrix out = a;
    out.scale(1.0 / e.s_max);
    return out;
}

double norm_1to2(const SymmetricMatrix& a) {
    const std::size_t d = a.dim();
    double best = 0;
    for (std::size_t j = 0; j < d; ++j) {
        double s = 0;
        for (std::size_t i = 0; i < d; ++i) {
            const double x = a(i, j);
            s += x * x;
        }
        best = std::max(best, s);
    }
    return std::sqrt(best);
}

SymmetricMatrix diag_of(const Matrix& m) {
    SymmetricMatrix s(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) s.lower(i, i) = m(i, i);
    return s;
}

SymmetricMatrix diag_of(const SymmetricMatrix& m) {
    SymmetricMatrix s(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) s.lower(i, i) = m(i, i);
    return s;
}

double operator_norm(const SymmetricMatrix& m) {
    if (m.dim() == 0) return 0;
    EigenDecomposition e = eig_all(m);
    return std::max(std::abs(e.values.front()), std::abs(e.values.back()));
}

double operator_norm(const Matrix& m) {
    if (m.dim() == 0) return 0;
    Matrix mtm = m.transposed() * m;
    EigenDecomposition e = eig_all(SymmetricMatrix::symmetrized(mtm));
    return std::sqrt(std::max(0.0, e.values.front()));
}

}  // namespace spca
