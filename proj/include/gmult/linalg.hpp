#pragma once

#include <Eigen/Dense>
#include <complex>

#include "gmult/errors.hpp"

namespace gmult {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Default relative tolerance; all contract checks use tol * (1 + scale)
/// with a hard absolute floor.
inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kTolFloor = 1e-12;

inline double scaled_tol(double scale, double tol = kDefaultTol) {
    double t = tol * (1.0 + scale);
    return t < kTolFloor ? kTolFloor : t;
}

/// Inner product, linear in the first slot and conjugate-linear in the
/// second: inner(u, v) = v^* u.
inline Complex inner(const ComplexVector& u, const ComplexVector& v) {
    return v.dot(u); // Eigen's dot conjugates its callee
}

/// The rank-one operator h |-> inner(h, y) * x, as the matrix x * y^*.
/// x and y may live in different spaces; the result maps y's space into x's.
ComplexMatrix rank_one(const ComplexVector& x, const ComplexVector& y);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// Hilbert-Schmidt norm: sqrt of the sum of squared entry moduli.
double frobenius_norm(const ComplexMatrix& m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

/// Singular values, nonincreasing.
Eigen::VectorXd singular_values(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, nondecreasing. Does not validate
/// Hermitian-ness; callers pass matrices Hermitian by construction.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

/// PSD square root of a Hermitian PSD matrix. Eigenvalues in
/// [-tol*scale, 0) are clamped to zero.
/// Throws NotHermitian / NotPsd when the input fails the respective check.
ComplexMatrix sqrt_psd(const ComplexMatrix& m, double tol = kDefaultTol);

/// Modulus |a| = (a^* a)^{1/2}, computed from the SVD.
ComplexMatrix matrix_abs(const ComplexMatrix& a);

struct PolarDecomposition {
    ComplexMatrix w;         // partial isometry, a = w * abs
    ComplexMatrix abs;       // (a^* a)^{1/2}, PSD
    ComplexMatrix w_unitary; // unitary extension of w with w_unitary * abs = a
    Eigen::Index rank = 0;
    double rank_tolerance = 0.0;
};

/// Polar decomposition a = w |a| of a square matrix. w is the partial
/// isometry from range(|a|) onto range(a); w_unitary completes it to a
/// unitary using the singular bases, so w_unitary * |a| = a exactly.
PolarDecomposition polar_decompose(const ComplexMatrix& a);

/// A conjugate-linear isometry v |-> matrix * conj(v), with unitary matrix.
/// Every conjugate-linear isometry of a finite-dimensional complex space
/// factors this way.
struct ConjLinearIsometry {
    ComplexMatrix matrix;

    ComplexVector apply(const ComplexVector& v) const {
        if (v.size() != matrix.cols())
            throw DimMismatch("conjugate-linear isometry: vector dimension mismatch");
        return matrix * v.conjugate();
    }
};

/// Plain entrywise conjugation on a d-dimensional space.
ConjLinearIsometry conjugation_isometry(Eigen::Index d);

} // namespace gmult
