#pragma once

#include "gmult/multiplier.hpp"
#include "gmult/report.hpp"
#include "gmult/rng.hpp"

namespace gmult {

/// Context (theta, F, x) for the generalized Hilbert-Schmidt class: a
/// conjugate-linear isometry on H0, an operator-valued orthonormal basis
/// and a vector sequence in H0. Construction precomputes the probe
/// vectors p_n = F_n^* x_n and solves the membership conditions once.
///
/// Both condition families are jointly linear in (U, V) after the outer
/// conjugation, so exactness on the d^2 elementary operators in each slot
/// is exactness for all bounded U, V. For elementary U = e_i e_j^*,
/// V = e_k e_l^* the two families reduce to
///     A(j,k) * bracket(n,m,i,l) = 0   and   conj(A(k,j)) * bracket(n,m,i,l) = 0
/// with the context-only defect
///     bracket(n,m,i,l) = conj(p_n(i)) theta(F_m e_l) - p_m(l) (F_n e_i),
/// so the solution space is either all of B(H) (every bracket vanishes)
/// or the zero subspace.
struct GhsContext {
    ConjLinearIsometry theta;
    OpSequence f;
    VectorSeq x;

    std::vector<ComplexVector> probes; // p_n = F_n^* x_n
    double probe_scale = 0.0;          // max_n ||p_n||
    double bracket_sup = 0.0;          // max defect over elementary pairs
    std::vector<ComplexMatrix> admissible_basis; // Frobenius-orthonormal
    double tol = kDefaultTol;

    Eigen::Index dim() const { return f.d; }
    Eigen::Index terms() const { return f.terms(); }
};

GhsContext make_ghs_context(ConjLinearIsometry theta, OpSequence f, VectorSeq x,
                            double tol = kDefaultTol);

/// Canonical context: d0 = 1, coordinate slices, x_n = 1, plain
/// conjugation. Every operator is a member and sigma is the Frobenius norm.
GhsContext std_context(Eigen::Index d);

/// Unitary-conjugate context with theta = u0 * conj on a one-dimensional
/// H0: F the row slices of a seeded Haar unitary and x_n = xi constant
/// with xi / conj(xi) = u0. Every operator is a member and
/// sigma(A) = |xi| * frobenius_norm(A).
GhsContext phase_context(Eigen::Index d, double phase, double amplitude,
                         std::uint64_t seed);

struct MembershipVerdict {
    bool is_member = false;
    double residual_cond1 = 0.0;
    double residual_cond2 = 0.0;
    double sigma_value = 0.0;
};

/// Evaluates both condition families over the elementary operator pairs
/// and all (n, m); the verdict holds iff both max residuals are within
/// tol * (1 + |A| * probe scale).
MembershipVerdict is_member(const GhsContext& ctx, const ComplexMatrix& a,
                            double tol = kDefaultTol);

/// Residuals of the two condition families for one arbitrary (U, V) pair,
/// maximized over (n, m). Used to spot-check the elementary-basis
/// reduction against dense operators.
std::pair<double, double> membership_residual(const GhsContext& ctx,
                                              const ComplexMatrix& a,
                                              const ComplexMatrix& u,
                                              const ComplexMatrix& v);

/// Frobenius-orthonormal basis of the solution space of the two condition
/// families (the realized class as a subspace of B(H)).
std::vector<ComplexMatrix> admissible_subspace(const GhsContext& ctx);

/// Random element of the admissible span, O(1) scale; zero when the
/// admissible subspace is trivial.
ComplexMatrix random_member(const GhsContext& ctx, Rng& rng);

/// sigma(A) = sqrt(sum_n ||A p_n||^2).
double sigma(const GhsContext& ctx, const ComplexMatrix& a);

/// <A, B> = sum_n <A p_n, B p_n>.
Complex ghs_inner(const GhsContext& ctx, const ComplexMatrix& a,
                  const ComplexMatrix& b);

/// Largest a with a ||h|| <= (sum_n |<h, p_n>|^p)^{1/p} on the unit
/// sphere. Exact (smallest singular value of the probe analysis matrix)
/// for p = 2; a seeded multistart descent estimate for p > 2.
double pframe_lower_constant(const GhsContext& ctx, double p);

/// Tr(A) = sum_n <A p_n, p_n>.
Complex trace(const GhsContext& ctx, const ComplexMatrix& a);

/// Trace-class membership via the sufficient condition: [A]^{1/2} in the
/// class. The verdict's residuals are those of [A]^{1/2}.
MembershipVerdict is_member_trace_class(const GhsContext& ctx,
                                        const ComplexMatrix& a,
                                        double tol = kDefaultTol);

/// tau(A) = Tr([A]); throws NotTraceClass when the membership certificate
/// fails.
double tau(const GhsContext& ctx, const ComplexMatrix& a,
           double tol = kDefaultTol);

/// Property suites. Each draws seeded members and arbitrary operators and
/// emits one record per checked claim instance; hypotheses that cannot be
/// instantiated in the context are recorded as skipped.
VerificationReport ideal_suite(const GhsContext& ctx, std::uint64_t seed,
                               int trials, double tol = kDefaultTol);
VerificationReport inner_suite(const GhsContext& ctx, std::uint64_t seed,
                               int trials, double tol = kDefaultTol);
VerificationReport trace_suite(const GhsContext& ctx, std::uint64_t seed,
                               int trials, double tol = kDefaultTol);
VerificationReport tau_suite(const GhsContext& ctx, std::uint64_t seed,
                             int trials, double tol = kDefaultTol);

} // namespace gmult
