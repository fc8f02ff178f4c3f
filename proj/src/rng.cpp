#include "gmult/rng.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>

namespace gmult {

namespace {
std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}
} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t label) {
    return splitmix64(seed ^ splitmix64(label));
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& label) {
    return mix_seed(seed, fnv1a(label));
}

std::uint64_t Rng::integer(std::uint64_t bound) {
    if (bound == 0) return 0;
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % bound;
}

double Rng::gaussian() {
    double u1;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_gaussian() {
    double u1;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return Complex(r * std::cos(phi), r * std::sin(phi));
}

ComplexVector Rng::gaussian_vector(Eigen::Index dim) {
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = complex_gaussian();
    return v;
}

ComplexMatrix Rng::gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
    return m;
}

ComplexVector Rng::unit_vector(Eigen::Index dim) {
    ComplexVector v = gaussian_vector(dim);
    double n = v.norm();
    while (n < 1e-12) {
        v = gaussian_vector(dim);
        n = v.norm();
    }
    return v / n;
}

ComplexMatrix Rng::haar_unitary(Eigen::Index d) {
    ComplexMatrix g = gaussian_matrix(d, d);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < d; ++i) {
        const Complex rii = r(i, i);
        const double mag = std::abs(rii);
        q.col(i) *= (mag > 0.0) ? rii / mag : Complex(1.0, 0.0);
    }
    return q;
}

ComplexMatrix Rng::invertible_matrix(Eigen::Index d, double cond_cap) {
    ComplexMatrix u = haar_unitary(d);
    ComplexMatrix v = haar_unitary(d);
    Eigen::VectorXd s(d);
    const double smin = 1.0 / cond_cap;
    for (Eigen::Index i = 0; i < d; ++i)
        s(i) = std::exp(uniform(std::log(smin), 0.0));
    return u * s.asDiagonal() * v.adjoint();
}

} // namespace gmult
