#include "gmult/gbessel.hpp"

#include <cmath>
#include <limits>

#include "gmult/rng.hpp"

namespace gmult {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double TailLaw::eval(std::uint64_t n) const {
    switch (kind) {
        case Kind::none: return 0.0;
        case Kind::geometric: return std::pow(param, static_cast<double>(n));
        case Kind::power: return std::pow(static_cast<double>(n), param);
    }
    return 0.0;
}

double TailLaw::sup_beyond(std::uint64_t m) const {
    switch (kind) {
        case Kind::none:
            return 0.0;
        case Kind::geometric:
            if (std::abs(param) >= 1.0) return kInf;
            return std::pow(std::abs(param), static_cast<double>(m + 1));
        case Kind::power:
            if (param > 0.0) return kInf;
            return std::pow(static_cast<double>(m + 1), param);
    }
    return 0.0;
}

double TailLaw::l1_beyond(std::uint64_t m) const {
    switch (kind) {
        case Kind::none:
            return 0.0;
        case Kind::geometric: {
            const double r = std::abs(param);
            if (r >= 1.0) return kInf;
            return std::pow(r, static_cast<double>(m + 1)) / (1.0 - r);
        }
        case Kind::power:
            // integral bound: sum_{n>m} n^s <= m^{s+1} / (-s-1) for s < -1,
            // with the n = 1 term split off when m = 0
            if (param >= -1.0) return kInf;
            if (m == 0) return 1.0 + 1.0 / (-param - 1.0);
            return std::pow(static_cast<double>(m), param + 1.0) / (-param - 1.0);
    }
    return 0.0;
}

double TailLaw::l2_beyond(std::uint64_t m) const {
    switch (kind) {
        case Kind::none:
            return 0.0;
        case Kind::geometric: {
            const double r = std::abs(param);
            if (r >= 1.0) return kInf;
            return std::sqrt(std::pow(r, 2.0 * static_cast<double>(m + 1)) /
                             (1.0 - r * r));
        }
        case Kind::power: {
            const double s2 = 2.0 * param;
            if (s2 >= -1.0) return kInf;
            if (m == 0) return std::sqrt(1.0 + 1.0 / (-s2 - 1.0));
            return std::sqrt(std::pow(static_cast<double>(m), s2 + 1.0) /
                             (-s2 - 1.0));
        }
    }
    return 0.0;
}

void validate(const OpSequence& a) {
    if (a.d <= 0 || a.d0 <= 0)
        throw DimMismatch("OpSequence: dimensions must be positive");
    for (const auto& op : a.ops) {
        if (op.rows() != a.d0 || op.cols() != a.d)
            throw DimMismatch("OpSequence: operator shape must be d0 x d");
        if (!op.allFinite())
            throw ValidationError("OpSequence: non-finite entry");
    }
}

ComplexMatrix frame_operator(const OpSequence& a) {
    ComplexMatrix s = ComplexMatrix::Zero(a.d, a.d);
    for (const auto& op : a.ops) s += op.adjoint() * op;
    return s;
}

double optimal_bessel_bound(const OpSequence& a) {
    if (a.ops.empty()) return 0.0;
    Eigen::VectorXd eig = hermitian_eigenvalues(frame_operator(a));
    return std::max(eig(eig.size() - 1), 0.0);
}

ComplexMatrix analysis_matrix(const OpSequence& a) {
    ComplexMatrix m(a.terms() * a.d0, a.d);
    for (Eigen::Index n = 0; n < a.terms(); ++n)
        m.middleRows(n * a.d0, a.d0) = a.ops[static_cast<std::size_t>(n)];
    return m;
}

ComplexMatrix synthesis_matrix(const OpSequence& a) {
    return analysis_matrix(a).adjoint();
}

SequenceClassification classify(const OpSequence& a, double tol) {
    validate(a);
    SequenceClassification c;
    const Eigen::Index n = a.terms();

    ComplexMatrix s = frame_operator(a);
    Eigen::VectorXd eig = hermitian_eigenvalues(s);
    c.bessel_bound = n > 0 ? std::max(eig(eig.size() - 1), 0.0) : 0.0;
    const double eff = scaled_tol(c.bessel_bound, tol);

    double ortho = 0.0;
    const ComplexMatrix id0 = ComplexMatrix::Identity(a.d0, a.d0);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const ComplexMatrix prod =
                a.ops[static_cast<std::size_t>(i)] *
                a.ops[static_cast<std::size_t>(j)].adjoint();
            const double r =
                operator_norm(i == j ? ComplexMatrix(prod - id0) : prod);
            ortho = std::max(ortho, r);
        }
    }
    c.residuals["orthogonality"] = ortho;
    c.is_orthogonal = ortho <= eff;

    c.is_orthonormal_sequence = c.is_orthogonal && c.bessel_bound <= 1.0 + eff;

    const double frameResidual =
        operator_norm(ComplexMatrix(s - ComplexMatrix::Identity(a.d, a.d)));
    c.residuals["frame-identity"] = frameResidual;
    c.is_orthonormal_basis = c.is_orthonormal_sequence && frameResidual <= eff;

    if (n > 0) {
        Eigen::VectorXd sv = singular_values(synthesis_matrix(a));
        const double smin = sv(sv.size() - 1);
        const double smax = sv(0);
        c.residuals["synthesis-min-singular"] = smin;
        if (smin > eff) c.riesz_bounds = std::make_pair(smin * smin, smax * smax);
    }
    return c;
}

OpSequence random_onb(Eigen::Index d0, Eigen::Index n_terms, std::uint64_t seed) {
    if (d0 <= 0 || n_terms <= 0)
        throw DimMismatch("random_onb: d0 and n_terms must be positive");
    const Eigen::Index d = d0 * n_terms;
    Rng rng(seed);
    ComplexMatrix u = rng.haar_unitary(d);
    OpSequence f;
    f.d = d;
    f.d0 = d0;
    f.ops.reserve(static_cast<std::size_t>(n_terms));
    for (Eigen::Index n = 0; n < n_terms; ++n)
        f.ops.push_back(u.middleRows(n * d0, d0));
    return f;
}

OpSequence std_onb(Eigen::Index d) {
    if (d <= 0) throw DimMismatch("std_onb: d must be positive");
    OpSequence f;
    f.d = d;
    f.d0 = 1;
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    for (Eigen::Index n = 0; n < d; ++n) f.ops.push_back(id.row(n));
    return f;
}

OpSequence std_block_onb(Eigen::Index d0, Eigen::Index n_terms) {
    if (d0 <= 0 || n_terms <= 0)
        throw DimMismatch("std_block_onb: dimensions must be positive");
    const Eigen::Index d = d0 * n_terms;
    OpSequence f;
    f.d = d;
    f.d0 = d0;
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    for (Eigen::Index n = 0; n < n_terms; ++n)
        f.ops.push_back(id.middleRows(n * d0, d0));
    return f;
}

ComplexMatrix onb_transition_unitary(const OpSequence& b, const OpSequence& a,
                                     double tol) {
    if (a.d != b.d || a.d0 != b.d0 || a.terms() != b.terms())
        throw DimMismatch("onb_transition_unitary: dimension mismatch");
    if (!classify(b, tol).is_orthonormal_basis)
        throw NotOrthonormalBasis("onb_transition_unitary: b is not an orthonormal basis");
    if (!classify(a, tol).is_orthonormal_basis)
        throw NotOrthonormalBasis("onb_transition_unitary: a is not an orthonormal basis");
    ComplexMatrix u = ComplexMatrix::Zero(a.d, a.d);
    for (Eigen::Index n = 0; n < a.terms(); ++n)
        u += b.ops[static_cast<std::size_t>(n)].adjoint() *
             a.ops[static_cast<std::size_t>(n)];
    return u;
}

ComplexMatrix riesz_transition(const OpSequence& f, const OpSequence& a,
                               double tol) {
    if (a.d != f.d || a.d0 != f.d0 || a.terms() != f.terms())
        throw DimMismatch("riesz_transition: dimension mismatch");
    if (!classify(f, tol).is_orthonormal_basis)
        throw NotOrthonormalBasis("riesz_transition: f is not an orthonormal basis");
    if (!classify(a, tol).riesz_bounds.has_value())
        throw NotRieszBasis("riesz_transition: a is not a Riesz basis");
    ComplexMatrix t = ComplexMatrix::Zero(a.d, a.d);
    for (Eigen::Index n = 0; n < a.terms(); ++n)
        t += f.ops[static_cast<std::size_t>(n)].adjoint() *
             a.ops[static_cast<std::size_t>(n)];
    return t;
}

} // namespace gmult
