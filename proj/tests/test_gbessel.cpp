#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/QR>

#include "gmult/gbessel.hpp"
#include "gmult/rng.hpp"

using namespace gmult;

namespace {
OpSequence rows_of(const ComplexMatrix& t) {
    OpSequence a;
    a.d = t.cols();
    a.d0 = 1;
    for (Eigen::Index i = 0; i < t.rows(); ++i) a.ops.push_back(t.row(i));
    return a;
}

OpSequence random_bessel(Eigen::Index d, Eigen::Index d0, Eigen::Index n, Rng& rng) {
    OpSequence a;
    a.d = d;
    a.d0 = d0;
    for (Eigen::Index k = 0; k < n; ++k) a.ops.push_back(rng.gaussian_matrix(d0, d));
    return a;
}
} // namespace

TEST_CASE("frame operator of coordinate slices") {
    OpSequence a = std_onb(2);
    CHECK((frame_operator(a) - ComplexMatrix::Identity(2, 2)).norm() <= 1e-15);

    a.ops[0] *= 2.0;
    ComplexMatrix s = frame_operator(a);
    CHECK(s(0, 0).real() == doctest::Approx(4.0));
    CHECK(s(1, 1).real() == doctest::Approx(1.0));
    CHECK(std::abs(s(0, 1)) <= 1e-15);
}

TEST_CASE("frame operator quadratic form oracle") {
    Rng rng(101);
    OpSequence a = random_bessel(5, 2, 4, rng);
    ComplexMatrix s = frame_operator(a);
    for (int t = 0; t < 20; ++t) {
        ComplexVector h = rng.gaussian_vector(5);
        double direct = 0.0;
        for (const auto& op : a.ops) direct += (op * h).squaredNorm();
        const double viaS = inner(ComplexVector(s * h), h).real();
        CHECK(viaS == doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("optimal bessel bound on slices") {
    OpSequence a = std_onb(2);
    CHECK(optimal_bessel_bound(a) == doctest::Approx(1.0).epsilon(1e-14));
    a.ops[0] *= 2.0;
    CHECK(optimal_bessel_bound(a) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("bessel bound is not exceeded by sampled vectors") {
    Rng rng(111);
    OpSequence a = random_bessel(4, 2, 3, rng);
    const double b = optimal_bessel_bound(a);
    for (int t = 0; t < 1000; ++t) {
        ComplexVector h = rng.unit_vector(4);
        double sum = 0.0;
        for (const auto& op : a.ops) sum += (op * h).squaredNorm();
        CHECK(sum <= b * (1.0 + 1e-9));
    }
}

TEST_CASE("classification of coordinate slices") {
    SequenceClassification c = classify(std_onb(3));
    CHECK(c.is_orthogonal);
    CHECK(c.is_orthonormal_sequence);
    CHECK(c.is_orthonormal_basis);
    REQUIRE(c.riesz_bounds.has_value());
    CHECK(c.riesz_bounds->first == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.riesz_bounds->second == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("classification of haar unitary slices") {
    Rng rng(121);
    OpSequence a = rows_of(rng.haar_unitary(5));
    CHECK(classify(a).is_orthonormal_basis);
}

TEST_CASE("classification of invertible non-unitary rows") {
    Rng rng(131);
    for (int t = 0; t < 20; ++t) {
        ComplexMatrix m = rng.invertible_matrix(4, 50.0) * 2.0;
        OpSequence a = rows_of(m);
        SequenceClassification c = classify(a);
        REQUIRE(c.riesz_bounds.has_value());
        Eigen::VectorXd sv = singular_values(m);
        CHECK(c.riesz_bounds->first ==
              doctest::Approx(sv(sv.size() - 1) * sv(sv.size() - 1)).epsilon(1e-9));
        CHECK(c.riesz_bounds->second == doctest::Approx(sv(0) * sv(0)).epsilon(1e-9));
    }
    // a generic invertible matrix has non-orthogonal rows
    ComplexMatrix m = rng.invertible_matrix(4, 10.0);
    m.row(0) += m.row(1);
    CHECK_FALSE(classify(rows_of(m)).is_orthogonal);
}

TEST_CASE("random_onb classification, block products and determinism") {
    OpSequence f = random_onb(1, 3, 7);
    CHECK(classify(f).is_orthonormal_basis);

    OpSequence g = random_onb(2, 2, 9);
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    for (std::size_t n = 0; n < g.ops.size(); ++n)
        for (std::size_t m = 0; m < g.ops.size(); ++m) {
            ComplexMatrix p = g.ops[n] * g.ops[m].adjoint();
            if (n == m)
                CHECK((p - id).norm() <= 1e-12);
            else
                CHECK(p.norm() <= 1e-12);
        }

    OpSequence g2 = random_onb(2, 2, 9);
    for (std::size_t n = 0; n < g.ops.size(); ++n)
        CHECK((g.ops[n] - g2.ops[n]).norm() == 0.0);

    CHECK_THROWS_AS(random_onb(0, 3, 1), DimMismatch);
}

TEST_CASE("classify never upgrades a strict bessel sequence") {
    Rng rng(141);
    OpSequence a = random_bessel(4, 1, 6, rng);
    SequenceClassification c = classify(a);
    CHECK_FALSE(c.is_orthogonal);
    CHECK_FALSE(c.is_orthonormal_basis);
}

TEST_CASE("transition unitary between orthonormal bases") {
    OpSequence b = random_onb(2, 3, 17);
    ComplexMatrix u = onb_transition_unitary(b, b);
    CHECK((u - ComplexMatrix::Identity(6, 6)).norm() <= 1e-12);

    Rng rng(151);
    ComplexMatrix u0 = rng.haar_unitary(6);
    OpSequence a = b;
    for (auto& op : a.ops) op = op * u0;
    u = onb_transition_unitary(b, a);
    CHECK((u - u0).norm() <= 1e-10);
    CHECK((u.adjoint() * u - ComplexMatrix::Identity(6, 6)).norm() <= 1e-12);
    CHECK((u * u.adjoint() - ComplexMatrix::Identity(6, 6)).norm() <= 1e-12);
    for (std::size_t n = 0; n < a.ops.size(); ++n)
        CHECK((a.ops[n] - b.ops[n] * u).norm() <= 1e-12);

    // uniqueness: the stacked least-squares solution coincides
    ComplexMatrix stackedB = analysis_matrix(b), stackedA = analysis_matrix(a);
    ComplexMatrix lsq = stackedB.colPivHouseholderQr().solve(stackedA);
    CHECK((u - lsq).norm() <= 1e-10);

    OpSequence notOnb = b;
    notOnb.ops[0] *= 2.0;
    CHECK_THROWS_AS(onb_transition_unitary(b, notOnb), NotOrthonormalBasis);
}

TEST_CASE("riesz transition recovers the planted operator") {
    OpSequence f = random_onb(2, 3, 23);
    ComplexMatrix t = riesz_transition(f, f);
    CHECK((t - ComplexMatrix::Identity(6, 6)).norm() <= 1e-12);

    Rng rng(161);
    ComplexMatrix t0 = rng.invertible_matrix(6, 20.0);
    OpSequence a = f;
    for (auto& op : a.ops) op = op * t0;
    t = riesz_transition(f, a);
    CHECK((t - t0).norm() <= 1e-9);
    for (std::size_t n = 0; n < a.ops.size(); ++n)
        CHECK((a.ops[n] - f.ops[n] * t).norm() <= 1e-10);

    Eigen::VectorXd sv = singular_values(t), sv0 = singular_values(t0);
    CHECK(sv(0) / sv(sv.size() - 1) ==
          doctest::Approx(sv0(0) / sv0(sv0.size() - 1)).epsilon(1e-9));

    // riesz bounds of a relative to f are the squared extreme singular values
    SequenceClassification c = classify(a);
    REQUIRE(c.riesz_bounds.has_value());
    CHECK(c.riesz_bounds->first ==
          doctest::Approx(sv0(sv0.size() - 1) * sv0(sv0.size() - 1)).epsilon(1e-9));
    CHECK(c.riesz_bounds->second ==
          doctest::Approx(sv0(0) * sv0(0)).epsilon(1e-9));

    OpSequence degenerate = f;
    degenerate.ops[0].setZero();
    CHECK_THROWS_AS(riesz_transition(f, degenerate), NotRieszBasis);
    CHECK_THROWS_AS(riesz_transition(degenerate, a), NotOrthonormalBasis);
}

TEST_CASE("termwise sum of sequences obeys the sqrt-bound triangle") {
    Rng rng(171);
    for (int t = 0; t < 200; ++t) {
        const Eigen::Index d = 3 + static_cast<Eigen::Index>(rng.integer(3));
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.integer(3));
        OpSequence a = random_bessel(d, 2, n, rng);
        OpSequence c = random_bessel(d, 2, n, rng);
        OpSequence sum = a;
        for (Eigen::Index k = 0; k < n; ++k)
            sum.ops[static_cast<std::size_t>(k)] += c.ops[static_cast<std::size_t>(k)];
        const double sa = std::sqrt(optimal_bessel_bound(a));
        const double sc = std::sqrt(optimal_bessel_bound(c));
        const double ss = std::sqrt(optimal_bessel_bound(sum));
        CHECK(ss <= (sa + sc) * (1.0 + 1e-12));
    }
}

TEST_CASE("operator norms never exceed the sqrt of the bessel bound") {
    Rng rng(181);
    OpSequence a = random_bessel(5, 2, 4, rng);
    const double b = optimal_bessel_bound(a);
    for (const auto& op : a.ops) {
        const double n = operator_norm(op);
        CHECK(n * n <= b * (1.0 + 1e-12));
    }
}

TEST_CASE("tail law evaluation and tail norms") {
    TailLaw none;
    CHECK(none.sup_beyond(0) == 0.0);

    TailLaw geo{TailLaw::Kind::geometric, 0.5};
    CHECK(geo.eval(3) == doctest::Approx(0.125));
    CHECK(geo.sup_beyond(2) == doctest::Approx(0.125));
    CHECK(geo.l1_beyond(2) == doctest::Approx(0.25)); // 0.125 / (1 - 0.5)
    CHECK(geo.l2_beyond(0) ==
          doctest::Approx(std::sqrt(0.25 / 0.75)));

    TailLaw pow{TailLaw::Kind::power, -2.0};
    CHECK(pow.eval(4) == doctest::Approx(1.0 / 16.0));
    CHECK(pow.sup_beyond(3) == doctest::Approx(1.0 / 16.0));
    CHECK(pow.l1_beyond(10) <= 0.1 + 1e-12);   // integral bound 1/m
    CHECK(pow.l1_beyond(10) >= 0.05);
    CHECK(std::isinf(TailLaw{TailLaw::Kind::power, 1.0}.sup_beyond(5)));
}
