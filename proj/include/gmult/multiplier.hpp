#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "gmult/gbessel.hpp"

namespace gmult {

/// Finite truncation of a scalar weight sequence {lambda_n}, with a declared
/// sequence-space membership and an optional symbolic law for the terms
/// beyond the truncation.
struct WeightSeq {
    enum class ClassTag { linf, c0, l1, l2 };

    std::vector<Complex> values;
    ClassTag tag = ClassTag::linf;
    TailLaw tail;

    Eigen::Index terms() const { return static_cast<Eigen::Index>(values.size()); }

    /// sup_n |lambda_n| including the tail.
    double sup_norm() const;
    /// sup over indices n > m (1-based) including the tail.
    double sup_beyond(Eigen::Index m) const;
    /// l1 / l2 norms including the closed-form tail. Infinite when the
    /// tail law does not decay fast enough.
    double l1_norm() const;
    double l2_norm() const;
};

WeightSeq conj(const WeightSeq& w);

/// Finite list of vectors in H0.
struct VectorSeq {
    std::vector<ComplexVector> vecs;

    Eigen::Index terms() const { return static_cast<Eigen::Index>(vecs.size()); }
    Eigen::Index dim() const { return vecs.empty() ? 0 : vecs.front().size(); }
};

double sup_pair_norm(const VectorSeq& x, const VectorSeq& y);

/// The data (lambda, A, B, x, y) of a Bessel multiplier
///   M = sum_n lambda_n   (A_n^* x_n) (B_n^* y_n)^*
/// together with cached Bessel bounds and the pair-norm sup.
struct MultiplierSpec {
    WeightSeq lambda;
    OpSequence a, b;
    VectorSeq x, y;

    double bessel_a = 0.0;
    double bessel_b = 0.0;
    double sup_pair = 0.0;

    Eigen::Index terms() const { return lambda.terms(); }
    Eigen::Index dim() const { return a.d; }
};

/// Validates shapes, computes the cached bounds. Throws DimMismatch.
MultiplierSpec make_multiplier_spec(WeightSeq lambda, OpSequence a, OpSequence b,
                                    VectorSeq x, VectorSeq y);

/// Analysis vectors u_n = A_n^* x_n.
std::vector<ComplexVector> carrier_vectors(const OpSequence& seq, const VectorSeq& v);

/// The assembled d x d multiplier matrix.
ComplexMatrix assemble(const MultiplierSpec& spec);

/// Partial sum over the first m terms.
ComplexMatrix assemble_partial(const MultiplierSpec& spec, Eigen::Index m);

/// sqrt(b_A b_B) * sup|lambda| * sup ||x_n|| ||y_n||; an upper bound for
/// the operator norm of the assembled multiplier.
double existence_bound(const MultiplierSpec& spec);

/// Adjoint exchange: (conj lambda, B, A, y, x), which assembles to M^*.
MultiplierSpec multiplier_adjoint(const MultiplierSpec& spec);

/// M M^* reduction weights: mu_n = |lambda_n|^2 ||B_n^* y_n||^2, and the
/// square-root weights |lambda_n| ||B_n^* y_n|| / ||x_n|| when every x_n
/// is nonzero. Requires A orthonormal and B orthogonal.
std::pair<WeightSeq, std::optional<WeightSeq>>
mmstar_reduction(const MultiplierSpec& spec);

/// M^* M reduction weights: gamma_n = |lambda_n|^2 ||A_n^* x_n||^2, with
/// square roots over ||y_n||. Requires A orthogonal and B orthonormal.
std::pair<WeightSeq, std::optional<WeightSeq>>
mstarm_reduction(const MultiplierSpec& spec);

/// Closed form of M^k under the biorthogonality hypothesis
/// <A_j^* x_j, B_n^* y_n> = 0 for j != n.
ComplexMatrix power_formula(const MultiplierSpec& spec, int k);

/// Weights nu_n = lambda_n mu_n <A_n^* x_n, B_n^* y_n> with
/// assemble(s1) * assemble(s2) = assemble(result); s1 and s2 must share
/// (A, B, x, y) and satisfy the biorthogonality hypothesis.
MultiplierSpec symbolic_product(const MultiplierSpec& s1, const MultiplierSpec& s2);

enum class ComposeSite { tb, bs, ta, as_site, ty, tx };

using ComposeArg = std::variant<std::vector<ComplexMatrix>, ComplexMatrix>;

struct ComposedMultiplier {
    MultiplierSpec spec;  // right-hand side of the rewriting identity
    ComplexMatrix left;   // assemble(lhs) = left * assemble(spec) * right
    ComplexMatrix right;
};

/// The left-hand side of the site identity: the input spec with the map
/// applied at the site (B -> T_n B_n, B -> B S, A -> T_n A_n, A -> A S,
/// y -> T_n y_n, x -> T_n x_n respectively).
MultiplierSpec compose_site_lhs(const MultiplierSpec& spec, ComposeSite site,
                                const ComposeArg& arg);

/// Moves a bounded map across the multiplier data. The returned spec,
/// together with the left/right factors, assembles to the same matrix as
/// compose_site_lhs(spec, site, arg).
ComposedMultiplier compose_maps(const MultiplierSpec& spec, ComposeSite site,
                                const ComposeArg& arg);

/// Closed form of assemble(s1) * assemble(s2) under cross-biorthogonality
/// <C_k^* z_k, B_n^* y_n> = 0 for k != n, where s1 = (lambda, A, B, x, y)
/// and s2 = (mu, C, D, z, v).
ComplexMatrix product_general(const MultiplierSpec& s1, const MultiplierSpec& s2);

/// (||M_{lambda mu}||, min{sup|lambda| ||M_mu||, sup|mu| ||M_lambda||}).
/// The three specs must share (A, B, x, y), the first must carry the
/// products of the other two weight sequences, and A must be orthogonal.
std::pair<double, double> norm_product_bound(const MultiplierSpec& spec_lambda_mu,
                                             const MultiplierSpec& spec_lambda,
                                             const MultiplierSpec& spec_mu);

/// (||M - M_m||, sqrt(b_A b_B) * supPair * sup_{n>m} |lambda_n|).
std::pair<double, double> tail_compactness(const MultiplierSpec& spec,
                                           Eigen::Index m);

/// (trace norm of M, sqrt(b_A b_B) * supPair * ||lambda||_1).
/// Requires classTag l1.
std::pair<double, double> nuclear_bound(const MultiplierSpec& spec);

/// (Frobenius norm of M, sqrt(b_A b_B) * supPair * ||lambda||_2).
/// Requires classTag l2 and A orthogonal.
std::pair<double, double> hs_bound(const MultiplierSpec& spec);

/// sqrt(sum_n |lambda_n|^2 ||A_n^* x_n||^2 ||B_n^* y_n||^2); equals the
/// Frobenius norm of the assembled multiplier when A is orthogonal.
double hs_identity_value(const MultiplierSpec& spec);

enum class ConvergenceMode { operator_norm, nuclear, hs };

/// For each weight sequence in the family: the distance of its multiplier
/// from spec's in the mode norm, and the proof-side constant
/// sqrt(b_A b_B) * supPair * ||family_k - lambda||_{inf/1/2}.
std::vector<std::pair<double, double>>
convergence_study(const MultiplierSpec& spec, const std::vector<WeightSeq>& family,
                  ConvergenceMode mode);

struct LowerBoundResult {
    double probe_lower = 0.0;       // best evaluation lower bound
    double closed_form_lower = 0.0; // best applicable closed form
    double upper = 0.0;             // ||T|| sup|lambda| supPair
};

/// Lower/upper bounds for ||M|| when A is an orthonormal basis and B a
/// Riesz basis (B_n = A_n T). Probes must be nonzero.
LowerBoundResult lower_bound(const MultiplierSpec& spec,
                             const std::vector<ComplexVector>& probes);

/// Reads the weights back out of an assembled multiplier matrix:
/// lambda_k = <A_k m T^{-1} A_k^* y_k, x_k> / (||y_k||^2 ||x_k||^2).
WeightSeq recover_lambda(const ComplexMatrix& m, const OpSequence& a,
                         const OpSequence& b, const VectorSeq& x,
                         const VectorSeq& y);

enum class SweepData { std_slices, haar };

/// For each N in sizes: builds the instance with weights lambda_n = law(n),
/// orthonormal-basis data and unit x, y, and returns (N, ||M^{(N)}||).
std::vector<std::pair<Eigen::Index, double>>
unbounded_sweep(const TailLaw& law, Eigen::Index d0,
                const std::vector<Eigen::Index>& sizes, std::uint64_t seed,
                SweepData data = SweepData::std_slices);

} // namespace gmult
