#include "gmult/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace gmult {

ComplexMatrix rank_one(const ComplexVector& x, const ComplexVector& y) {
    return x * y.adjoint();
}

double operator_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

double frobenius_norm(const ComplexMatrix& m) {
    return m.norm();
}

double trace_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues().sum();
}

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues();
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols())
        throw DimMismatch("sqrt_psd: matrix must be square");
    if (m.size() == 0) return m;

    const double scale = m.norm();
    if ((m - m.adjoint()).norm() > scaled_tol(scale, tol))
        throw NotHermitian("sqrt_psd: matrix is not Hermitian to tolerance");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
    Eigen::VectorXd eig = es.eigenvalues();
    const double eigScale = std::max(std::abs(eig(0)), std::abs(eig(eig.size() - 1)));
    const double floor = scaled_tol(eigScale, tol);
    Eigen::VectorXd root(eig.size());
    for (Eigen::Index i = 0; i < eig.size(); ++i) {
        if (eig(i) < -floor)
            throw NotPsd("sqrt_psd: negative eigenvalue beyond tolerance");
        root(i) = std::sqrt(std::max(eig(i), 0.0));
    }
    return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix matrix_abs(const ComplexMatrix& a) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
    return svd.matrixV() * svd.singularValues().asDiagonal() * svd.matrixV().adjoint();
}

PolarDecomposition polar_decompose(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw DimMismatch("polar_decompose: matrix must be square");

    const Eigen::Index d = a.rows();
    PolarDecomposition out;
    if (d == 0) return out;

    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    out.rank_tolerance = static_cast<double>(d) *
                         std::numeric_limits<double>::epsilon() * smax;

    Eigen::Index r = 0;
    while (r < sv.size() && sv(r) > out.rank_tolerance) ++r;
    out.rank = r;

    out.abs = svd.matrixV() * sv.asDiagonal() * svd.matrixV().adjoint();
    out.w = svd.matrixU().leftCols(r) * svd.matrixV().leftCols(r).adjoint();
    out.w_unitary = svd.matrixU() * svd.matrixV().adjoint();
    return out;
}

ConjLinearIsometry conjugation_isometry(Eigen::Index d) {
    return ConjLinearIsometry{ComplexMatrix::Identity(d, d)};
}

} // namespace gmult
