#pragma once

#include "gmult/multiplier.hpp"
#include "gmult/rng.hpp"

namespace gmult {

/// Seeded instance generators. Hypothesis-bearing instances (orthogonality,
/// biorthogonality, Riesz structure) are built so the hypotheses hold by
/// construction, up to rounding.

OpSequence random_bessel_sequence(Eigen::Index d, Eigen::Index d0,
                                  Eigen::Index n, Rng& rng);

VectorSeq random_vector_seq(Eigen::Index d0, Eigen::Index n, Rng& rng);

VectorSeq constant_vector_seq(const ComplexVector& v, Eigen::Index n);

WeightSeq random_weights(Eigen::Index n, Rng& rng,
                         WeightSeq::ClassTag tag = WeightSeq::ClassTag::linf);

/// Generic multiplier data: random Bessel sequences and vectors.
MultiplierSpec random_spec(Eigen::Index d, Eigen::Index d0, Eigen::Index n,
                           Rng& rng);

/// A and B independent random orthonormal bases (d = n * d0).
MultiplierSpec random_onb_spec(Eigen::Index d0, Eigen::Index n, Rng& rng);

/// A = B = one shared random orthonormal basis; the carrier pairings are
/// diagonal, so the symbolic-calculus hypotheses hold.
MultiplierSpec biorthogonal_spec(Eigen::Index d0, Eigen::Index n, Rng& rng);

/// Second spec over the same shared structure and fresh weights; the pair
/// (first, second) satisfies the cross-biorthogonality hypothesis
/// <C_k^* z_k, B_n^* y_n> = 0 for k != n with C = B = the shared basis.
std::pair<MultiplierSpec, MultiplierSpec>
biorthogonal_product_pair(Eigen::Index d0, Eigen::Index n, Rng& rng);

/// A a random orthonormal basis, B_n = A_n T for a random invertible T
/// with condition number at most cond_cap; x, y nonzero.
MultiplierSpec riesz_spec(Eigen::Index d0, Eigen::Index n, Rng& rng,
                          double cond_cap);

/// Coordinate-slice instance: A = B = std_onb(d), x = y = (1), so the
/// assembled multiplier is diag(lambda).
MultiplierSpec std_diag_spec(const std::vector<Complex>& lambda);

} // namespace gmult
