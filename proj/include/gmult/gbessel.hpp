#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmult/linalg.hpp"

namespace gmult {

/// Symbolic decay law for the terms beyond a finite truncation.
/// geometric(r): value r^n at index n; power(s): value n^s.
struct TailLaw {
    enum class Kind { none, geometric, power };
    Kind kind = Kind::none;
    double param = 0.0;

    double eval(std::uint64_t n) const;

    /// sup, l1-sum and l2-sum of |values| over indices n > m.
    /// Infinite when the law does not decay; the power-law sums use the
    /// integral bound, which upper-bounds the true tail.
    double sup_beyond(std::uint64_t m) const;
    double l1_beyond(std::uint64_t m) const;
    double l2_beyond(std::uint64_t m) const;
};

/// Finite truncation of an operator-valued sequence {A_n}: N operators
/// H -> H0, each stored as a d0 x d matrix.
struct OpSequence {
    Eigen::Index d = 0;  // dim H
    Eigen::Index d0 = 0; // dim H0
    std::vector<ComplexMatrix> ops;
    TailLaw tail;

    Eigen::Index terms() const { return static_cast<Eigen::Index>(ops.size()); }
};

/// Validates shapes and finiteness; throws DimMismatch / ValidationError.
void validate(const OpSequence& a);

struct SequenceClassification {
    double bessel_bound = 0.0;
    bool is_orthogonal = false;
    bool is_orthonormal_sequence = false;
    bool is_orthonormal_basis = false;
    std::optional<std::pair<double, double>> riesz_bounds;
    std::map<std::string, double> residuals;
};

/// The frame operator  S = sum_n A_n^* A_n  (d x d, Hermitian PSD).
ComplexMatrix frame_operator(const OpSequence& a);

/// Least b with sum_n ||A_n h||^2 <= b ||h||^2, i.e. lambda_max(S).
double optimal_bessel_bound(const OpSequence& a);

/// Stacked analysis matrix [A_1; ...; A_N]  (N*d0 x d).
ComplexMatrix analysis_matrix(const OpSequence& a);

/// Stacked synthesis matrix [A_1^* | ... | A_N^*]  (d x N*d0).
ComplexMatrix synthesis_matrix(const OpSequence& a);

/// Orthogonality / orthonormality / basis flags and Riesz bounds.
/// The effective tolerance is tol * (1 + bessel bound).
SequenceClassification classify(const OpSequence& a, double tol = kDefaultTol);

/// Seeded operator-valued orthonormal basis: the d0-row blocks of a
/// Haar-random unitary of size d = n_terms * d0.
OpSequence random_onb(Eigen::Index d0, Eigen::Index n_terms, std::uint64_t seed);

/// Coordinate-slice orthonormal basis: F_n = e_n^* (d0 = 1).
OpSequence std_onb(Eigen::Index d);

/// Identity block slices: F_n = n-th d0-row block of I_{n_terms * d0}.
OpSequence std_block_onb(Eigen::Index d0, Eigen::Index n_terms);

/// Unique unitary U with A_n = B_n U, computed as U = sum_n B_n^* A_n.
/// Both sequences must classify as orthonormal bases.
ComplexMatrix onb_transition_unitary(const OpSequence& b, const OpSequence& a,
                                     double tol = kDefaultTol);

/// Unique invertible T with A_n = F_n T, computed as T = sum_n F_n^* A_n.
/// f must classify as an orthonormal basis and a as a Riesz basis.
ComplexMatrix riesz_transition(const OpSequence& f, const OpSequence& a,
                               double tol = kDefaultTol);

} // namespace gmult
