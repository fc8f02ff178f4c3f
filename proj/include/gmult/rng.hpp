#pragma once

#include <cstdint>
#include <random>

#include "gmult/linalg.hpp"

namespace gmult {

/// Mixes a seed with a label; used to derive independent substreams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t label);
std::uint64_t mix_seed(std::uint64_t seed, const std::string& label);

/// Deterministic random source. Distributions are implemented on top of
/// raw mt19937_64 output so the stream depends only on the seed, not on
/// the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t integer(std::uint64_t bound); // in [0, bound)

    /// Standard normal via Box-Muller.
    double gaussian();

    /// Complex standard normal (unit total variance).
    Complex complex_gaussian();

    ComplexVector gaussian_vector(Eigen::Index dim);
    ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols);

    /// Random unit vector.
    ComplexVector unit_vector(Eigen::Index dim);

    /// Haar-distributed unitary: QR of a complex Gaussian matrix with the
    /// R-diagonal phases folded into Q so the draw is well defined.
    ComplexMatrix haar_unitary(Eigen::Index d);

    /// Invertible matrix with singular values in [1/condCap, 1].
    ComplexMatrix invertible_matrix(Eigen::Index d, double cond_cap);

private:
    std::mt19937_64 engine_;
};

} // namespace gmult
