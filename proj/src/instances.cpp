#include "gmult/instances.hpp"

#include <limits>

namespace gmult {

OpSequence random_bessel_sequence(Eigen::Index d, Eigen::Index d0,
                                  Eigen::Index n, Rng& rng) {
    OpSequence a;
    a.d = d;
    a.d0 = d0;
    a.ops.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k)
        a.ops.push_back(rng.gaussian_matrix(d0, d) / std::sqrt(static_cast<double>(d)));
    return a;
}

VectorSeq random_vector_seq(Eigen::Index d0, Eigen::Index n, Rng& rng) {
    VectorSeq v;
    v.vecs.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) v.vecs.push_back(rng.gaussian_vector(d0));
    return v;
}

VectorSeq constant_vector_seq(const ComplexVector& v, Eigen::Index n) {
    VectorSeq out;
    out.vecs.assign(static_cast<std::size_t>(n), v);
    return out;
}

WeightSeq random_weights(Eigen::Index n, Rng& rng, WeightSeq::ClassTag tag) {
    WeightSeq w;
    w.tag = tag;
    w.values.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) w.values.push_back(rng.complex_gaussian());
    return w;
}

MultiplierSpec random_spec(Eigen::Index d, Eigen::Index d0, Eigen::Index n,
                           Rng& rng) {
    return make_multiplier_spec(random_weights(n, rng),
                                random_bessel_sequence(d, d0, n, rng),
                                random_bessel_sequence(d, d0, n, rng),
                                random_vector_seq(d0, n, rng),
                                random_vector_seq(d0, n, rng));
}

MultiplierSpec random_onb_spec(Eigen::Index d0, Eigen::Index n, Rng& rng) {
    OpSequence a = random_onb(d0, n, rng.integer(std::numeric_limits<std::uint64_t>::max()));
    OpSequence b = random_onb(d0, n, rng.integer(std::numeric_limits<std::uint64_t>::max()));
    return make_multiplier_spec(random_weights(n, rng), a, b,
                                random_vector_seq(d0, n, rng),
                                random_vector_seq(d0, n, rng));
}

MultiplierSpec biorthogonal_spec(Eigen::Index d0, Eigen::Index n, Rng& rng) {
    OpSequence f = random_onb(d0, n, rng.integer(std::numeric_limits<std::uint64_t>::max()));
    return make_multiplier_spec(random_weights(n, rng), f, f,
                                random_vector_seq(d0, n, rng),
                                random_vector_seq(d0, n, rng));
}

std::pair<MultiplierSpec, MultiplierSpec>
biorthogonal_product_pair(Eigen::Index d0, Eigen::Index n, Rng& rng) {
    const Eigen::Index d = d0 * n;
    OpSequence f = random_onb(d0, n, rng.integer(std::numeric_limits<std::uint64_t>::max()));
    MultiplierSpec s1 = make_multiplier_spec(
        random_weights(n, rng), random_bessel_sequence(d, d0, n, rng), f,
        random_vector_seq(d0, n, rng), random_vector_seq(d0, n, rng));
    MultiplierSpec s2 = make_multiplier_spec(
        random_weights(n, rng), f, random_bessel_sequence(d, d0, n, rng),
        random_vector_seq(d0, n, rng), random_vector_seq(d0, n, rng));
    return {s1, s2};
}

MultiplierSpec riesz_spec(Eigen::Index d0, Eigen::Index n, Rng& rng,
                          double cond_cap) {
    const Eigen::Index d = d0 * n;
    OpSequence a = random_onb(d0, n, rng.integer(std::numeric_limits<std::uint64_t>::max()));
    ComplexMatrix t = rng.invertible_matrix(d, cond_cap);
    OpSequence b = a;
    for (auto& op : b.ops) op = op * t;
    VectorSeq x, y;
    for (Eigen::Index k = 0; k < n; ++k) {
        x.vecs.push_back(rng.unit_vector(d0) * (0.5 + rng.uniform()));
        y.vecs.push_back(rng.unit_vector(d0) * (0.5 + rng.uniform()));
    }
    return make_multiplier_spec(random_weights(n, rng), a, b, x, y);
}

MultiplierSpec std_diag_spec(const std::vector<Complex>& lambda) {
    const Eigen::Index d = static_cast<Eigen::Index>(lambda.size());
    OpSequence f = std_onb(d);
    ComplexVector one(1);
    one(0) = 1.0;
    WeightSeq w;
    w.values = lambda;
    return make_multiplier_spec(w, f, f, constant_vector_seq(one, d),
                                constant_vector_seq(one, d));
}

} // namespace gmult
