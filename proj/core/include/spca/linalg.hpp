#pragma once

#include <cstddef>
#include <vector>

namespace spca {

using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& v);
/// v / |v|; throws PreconditionError on numerically zero input.
Vector normalized(const Vector& v);
bool is_unit(const Vector& v, double tol = 1e-12);
/// y += c * x
void axpy(double c, const Vector& x, Vector& y);

/// Dense square matrix, row-major. Used for oracle-side products and
/// generic intermediates; the solver-facing type is SymmetricMatrix.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t d) : d_(d), a_(d * d, 0.0) {}

    static Matrix identity(std::size_t d);

    std::size_t dim() const { return d_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }
    const std::vector<double>& data() const { return a_; }

    Matrix transposed() const;
    /// max_ij |a_ij - b_ij|
    static double max_abs_diff(const Matrix& a, const Matrix& b);
    double max_abs() const;

private:
    std::size_t d_ = 0;
    std::vector<double> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double c, const Matrix& a);

/// Dense symmetric matrix storing only the lower triangle, so symmetry
/// is exact by construction and survives every operation bit-for-bit.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t d) : d_(d), tri_(d * (d + 1) / 2, 0.0) {}

    static SymmetricMatrix identity(std::size_t d);
    static SymmetricMatrix diagonal(const Vector& entries);
    /// Takes the lower triangle of m verbatim; upper triangle is ignored.
    static SymmetricMatrix from_lower_of(const Matrix& m);
    /// (M + M^T) / 2
    static SymmetricMatrix symmetrized(const Matrix& m);

    std::size_t dim() const { return d_; }
    double operator()(std::size_t i, std::size_t j) const {
        return i >= j ? tri_[i * (i + 1) / 2 + j] : tri_[j * (j + 1) / 2 + i];
    }
    double& lower(std::size_t i, std::size_t j) {  // requires j <= i
        return tri_[i * (i + 1) / 2 + j];
    }
    const std::vector<double>& triangle() const { return tri_; }
    std::vector<double>& triangle() { return tri_; }

    Vector diag() const;
    Matrix to_dense() const;
    /// y = A x
    Vector apply(const Vector& x) const;
    void scale(double c);
    double max_abs() const;
    static double max_abs_diff(const SymmetricMatrix& a, const SymmetricMatrix& b);

private:
    std::size_t d_ = 0;
    std::vector<double> tri_;
};

struct EigenDecomposition {
    Vector values;                 // descending: s_1 >= ... >= s_d
    std::vector<Vector> vectors;   // vectors[k] is the unit eigenvector for values[k]
};

/// Full eigendecomposition by cyclic Jacobi sweeps. Verification oracle;
/// O(d^3) per sweep, intended for d <= 5000. Throws ConvergenceError if
/// the off-diagonal mass does not vanish within the sweep cap.
EigenDecomposition eig_all(const SymmetricMatrix& a);

struct ExtremeEigen {
    double s_max = 0;  // largest eigenvalue
    double s_min = 0;  // smallest eigenvalue
    Vector v_max;      // unit eigenvector for s_max
};

/// Both ends of the spectrum via Lanczos with full reorthogonalization
/// (Jacobi on the small projected matrix). Cheap at large d; residuals
/// are verified explicitly and ConvergenceError is thrown otherwise.
ExtremeEigen extreme_eigenvalues(const SymmetricMatrix& a, double tol = 1e-11);

/// A / s_1, so the leading eigenvalue becomes exactly 1 and the spectral
/// norm 1. Rejects s_1 <= 0 and |s_d| > s_1 with NormalizeError: pure
/// scaling cannot realize both normalizations for such spectra, and
/// shifting would change the sampled entries.
SymmetricMatrix spectral_normalize(const SymmetricMatrix& a);

/// max_j |A_{:,j}|_2 (maximum Euclidean column norm).
double norm_1to2(const SymmetricMatrix& a);

/// Diagonal matrix carrying M's diagonal; off-diagonal exactly zero.
SymmetricMatrix diag_of(const Matrix& m);
SymmetricMatrix diag_of(const SymmetricMatrix& m);

/// Spectral norm. For the symmetric overload this is max |s_j| via
/// eig_all; the general overload goes through M^T M.
double operator_norm(const SymmetricMatrix& m);
double operator_norm(const Matrix& m);

}  // namespace spca
