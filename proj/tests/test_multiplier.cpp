#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmult/instances.hpp"
#include "gmult/multiplier.hpp"

using namespace gmult;

namespace {
std::vector<Complex> cvec(std::initializer_list<Complex> v) { return {v}; }

ComplexMatrix matrix_power(const ComplexMatrix& m, int k) {
    ComplexMatrix out = ComplexMatrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < k; ++i) out = out * m;
    return out;
}
} // namespace

TEST_CASE("assemble on coordinate slices gives a diagonal matrix") {
    MultiplierSpec spec = std_diag_spec(cvec({2.0, 3.0}));
    ComplexMatrix m = assemble(spec);
    CHECK((m - (ComplexMatrix(2, 2) << 2, 0, 0, 3).finished()).norm() <= 1e-15);
}

TEST_CASE("assemble with a single nonzero weight is one rank-one term") {
    Rng rng(201);
    MultiplierSpec spec = random_spec(5, 2, 4, rng);
    for (auto& v : spec.lambda.values) v = 0.0;
    spec.lambda.values[2] = Complex(1.5, -0.5);
    const ComplexMatrix m = assemble(spec);
    const ComplexMatrix term =
        spec.lambda.values[2] *
        rank_one(ComplexVector(spec.a.ops[2].adjoint() * spec.x.vecs[2]),
                 ComplexVector(spec.b.ops[2].adjoint() * spec.y.vecs[2]));
    CHECK((m - term).norm() <= 1e-14 * (1.0 + term.norm()));
}

TEST_CASE("assemble agrees with termwise evaluation") {
    Rng rng(202);
    MultiplierSpec spec = random_spec(6, 2, 3, rng);
    const ComplexMatrix m = assemble(spec);
    const auto u = carrier_vectors(spec.a, spec.x);
    const auto v = carrier_vectors(spec.b, spec.y);
    for (int t = 0; t < 50; ++t) {
        ComplexVector h = rng.gaussian_vector(6);
        ComplexVector direct = ComplexVector::Zero(6);
        for (std::size_t n = 0; n < u.size(); ++n)
            direct += spec.lambda.values[n] * inner(h, v[n]) * u[n];
        CHECK((m * h - direct).norm() <= 1e-10 * (1.0 + direct.norm()));
    }
}

TEST_CASE("existence bound is tight on the diagonal instance") {
    MultiplierSpec spec = std_diag_spec(cvec({2.0, 3.0}));
    CHECK(existence_bound(spec) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(operator_norm(assemble(spec)) == doctest::Approx(3.0).epsilon(1e-12));

    MultiplierSpec zero = std_diag_spec(cvec({0.0, 0.0}));
    CHECK(existence_bound(zero) == 0.0);
    CHECK(assemble(zero).norm() == 0.0);
}

TEST_CASE("existence bound dominates the operator norm on 500 random specs") {
    Rng rng(203);
    for (int t = 0; t < 500; ++t) {
        const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.integer(5));
        const Eigen::Index d0 = 1 + static_cast<Eigen::Index>(rng.integer(2));
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.integer(4));
        MultiplierSpec spec = random_spec(d, d0, n, rng);
        const double norm = operator_norm(assemble(spec));
        CHECK(norm <= existence_bound(spec) + 1e-9 * (1.0 + norm));
    }
}

TEST_CASE("adjoint exchange") {
    MultiplierSpec sa = std_diag_spec(cvec({1.0, -2.0}));
    ComplexMatrix m = assemble(sa);
    CHECK((m - m.adjoint()).norm() <= 1e-12 * (1.0 + m.norm()));

    Rng rng(211);
    MultiplierSpec spec = random_spec(5, 2, 3, rng);
    MultiplierSpec adj = multiplier_adjoint(spec);
    const ComplexMatrix lhs = assemble(adj);
    const ComplexMatrix rhs = assemble(spec).adjoint();
    CHECK((lhs - rhs).norm() <= 1e-10 * (1.0 + rhs.norm()));

    // involution assembles back to the original exactly
    MultiplierSpec twice = multiplier_adjoint(adj);
    CHECK((assemble(twice) - assemble(spec)).norm() == 0.0);
}

TEST_CASE("mmstar reduction on the diagonal instance") {
    MultiplierSpec spec = std_diag_spec(cvec({Complex(2.0, 0.0), Complex(0.0, 3.0)}));
    auto [mu, root] = mmstar_reduction(spec);
    REQUIRE(mu.values.size() == 2);
    CHECK(mu.values[0] == Complex(4.0, 0.0));
    CHECK(mu.values[1] == Complex(9.0, 0.0));
    REQUIRE(root.has_value());

    const ComplexMatrix m = assemble(spec);
    MultiplierSpec muSpec = spec;
    muSpec.lambda = mu;
    muSpec.b = spec.a;
    muSpec.y = spec.x;
    CHECK((m * m.adjoint() - assemble(muSpec)).norm() <= 1e-12);
}

TEST_CASE("mmstar and mstarm reductions on conforming random instances") {
    Rng rng(221);
    for (int t = 0; t < 25; ++t) {
        MultiplierSpec spec = random_onb_spec(2, 3, rng);
        const ComplexMatrix m = assemble(spec);
        const double scale = 1.0 + operator_norm(m) * operator_norm(m);

        auto [mu, root] = mmstar_reduction(spec);
        MultiplierSpec muSpec =
            make_multiplier_spec(mu, spec.a, spec.a, spec.x, spec.x);
        CHECK((m * m.adjoint() - assemble(muSpec)).norm() <= 1e-9 * scale);
        REQUIRE(root.has_value());
        MultiplierSpec rootSpec =
            make_multiplier_spec(*root, spec.a, spec.a, spec.x, spec.x);
        const ComplexMatrix r = assemble(rootSpec);
        CHECK((r * r - m * m.adjoint()).norm() <= 1e-9 * scale);
        CHECK((r - r.adjoint()).norm() <= 1e-10 * scale);
        CHECK(hermitian_eigenvalues(r).minCoeff() >= -1e-10 * scale);

        auto [gamma, groot] = mstarm_reduction(spec);
        MultiplierSpec gammaSpec =
            make_multiplier_spec(gamma, spec.b, spec.b, spec.y, spec.y);
        CHECK((m.adjoint() * m - assemble(gammaSpec)).norm() <= 1e-9 * scale);
        REQUIRE(groot.has_value());
    }

    MultiplierSpec bad = random_spec(4, 2, 2, rng);
    CHECK_THROWS_AS(mmstar_reduction(bad), PreconditionFailed);
    CHECK_THROWS_AS(mstarm_reduction(bad), PreconditionFailed);
}

TEST_CASE("zero weights collapse the reductions") {
    MultiplierSpec spec = std_diag_spec(cvec({0.0, 0.0, 0.0}));
    auto [mu, root] = mmstar_reduction(spec);
    for (const auto& v : mu.values) CHECK(std::abs(v) == 0.0);
    CHECK(assemble(spec).norm() == 0.0);
}

TEST_CASE("power formula") {
    MultiplierSpec diag = std_diag_spec(cvec({2.0, 3.0}));
    CHECK((power_formula(diag, 1) - assemble(diag)).norm() <= 1e-15);
    ComplexMatrix cube = power_formula(diag, 3);
    CHECK(cube(0, 0) == Complex(8.0, 0.0));
    CHECK(cube(1, 1) == Complex(27.0, 0.0));

    Rng rng(231);
    for (int t = 0; t < 25; ++t) {
        MultiplierSpec spec = biorthogonal_spec(2, 3, rng);
        const ComplexMatrix m = assemble(spec);
        const ComplexMatrix m4 = matrix_power(m, 4);
        CHECK((power_formula(spec, 4) - m4).norm() <= 1e-8 * (1.0 + m4.norm()));
    }

    MultiplierSpec generic = random_spec(5, 2, 4, rng);
    CHECK_THROWS_AS(power_formula(generic, 2), BiorthogonalityViolated);
}

TEST_CASE("symbolic calculus") {
    // pairings are exactly 1 on the coordinate instance
    MultiplierSpec s1 = std_diag_spec(cvec({Complex(1, 1), Complex(2, 0)}));
    MultiplierSpec ones = std_diag_spec(cvec({1.0, 1.0}));
    MultiplierSpec prod = symbolic_product(s1, ones);
    CHECK(prod.lambda.values[0] == s1.lambda.values[0]);
    CHECK(prod.lambda.values[1] == s1.lambda.values[1]);

    MultiplierSpec s2 = std_diag_spec(cvec({Complex(0, 2), Complex(-1, 0)}));
    prod = symbolic_product(s1, s2);
    for (std::size_t n = 0; n < 2; ++n)
        CHECK(prod.lambda.values[n] ==
              s1.lambda.values[n] * s2.lambda.values[n]);

    Rng rng(241);
    for (int t = 0; t < 25; ++t) {
        MultiplierSpec a = biorthogonal_spec(2, 3, rng);
        MultiplierSpec b = a;
        b.lambda = random_weights(3, rng);
        const ComplexMatrix direct = assemble(a) * assemble(b);
        const ComplexMatrix closed = assemble(symbolic_product(a, b));
        CHECK((direct - closed).norm() <= 1e-9 * (1.0 + direct.norm()));
    }

    MultiplierSpec other = std_diag_spec(cvec({1.0, 1.0, 1.0}));
    CHECK_THROWS_AS(symbolic_product(s1, other), SharedDataMismatch);
}

TEST_CASE("map composition identities at all six sites") {
    Rng rng(251);
    for (int t = 0; t < 10; ++t) {
        MultiplierSpec spec = random_spec(6, 2, 3, rng);

        // identity maps leave the assembled matrix unchanged
        std::vector<ComplexMatrix> idList(3, ComplexMatrix::Identity(2, 2));
        ComposedMultiplier c = compose_maps(spec, ComposeSite::tb, ComposeArg(idList));
        CHECK((assemble(c.spec) - assemble(spec)).norm() <= 1e-14);
        c = compose_maps(spec, ComposeSite::bs,
                         ComposeArg(ComplexMatrix(ComplexMatrix::Identity(6, 6))));
        CHECK((c.left * assemble(c.spec) * c.right - assemble(spec)).norm() <= 1e-14);

        std::vector<ComplexMatrix> tlist;
        for (int i = 0; i < 3; ++i) tlist.push_back(rng.gaussian_matrix(2, 2));
        const ComplexMatrix s = rng.gaussian_matrix(6, 6);

        for (ComposeSite site : {ComposeSite::tb, ComposeSite::ta, ComposeSite::ty,
                                 ComposeSite::tx}) {
            const MultiplierSpec lhs = compose_site_lhs(spec, site, ComposeArg(tlist));
            const ComposedMultiplier rhs = compose_maps(spec, site, ComposeArg(tlist));
            const ComplexMatrix l = assemble(lhs);
            const ComplexMatrix r = rhs.left * assemble(rhs.spec) * rhs.right;
            CHECK((l - r).norm() <= 1e-10 * (1.0 + l.norm()));
        }
        for (ComposeSite site : {ComposeSite::bs, ComposeSite::as_site}) {
            const MultiplierSpec lhs = compose_site_lhs(spec, site, ComposeArg(s));
            const ComposedMultiplier rhs = compose_maps(spec, site, ComposeArg(s));
            const ComplexMatrix l = assemble(lhs);
            const ComplexMatrix r = rhs.left * assemble(rhs.spec) * rhs.right;
            CHECK((l - r).norm() <= 1e-10 * (1.0 + l.norm()));
        }
    }
}

TEST_CASE("general product closed form") {
    Rng rng(261);
    for (int t = 0; t < 25; ++t) {
        auto [s1, s2] = biorthogonal_product_pair(2, 3, rng);
        const ComplexMatrix direct = assemble(s1) * assemble(s2);
        const ComplexMatrix closed = product_general(s1, s2);
        CHECK((direct - closed).norm() <= 1e-9 * (1.0 + direct.norm()));
    }

    // with shared basis data it reduces to the symbolic product
    MultiplierSpec a = biorthogonal_spec(1, 4, rng);
    MultiplierSpec b = a;
    b.lambda = random_weights(4, rng);
    CHECK((product_general(a, b) - assemble(symbolic_product(a, b))).norm() <= 1e-12);

    MultiplierSpec zero = a;
    for (auto& v : zero.lambda.values) v = 0.0;
    CHECK(product_general(zero, b).norm() == 0.0);
}

TEST_CASE("weighted product norm bound") {
    Rng rng(271);
    for (int t = 0; t < 200; ++t) {
        MultiplierSpec base = random_onb_spec(2, 2, rng);
        WeightSeq lambda = random_weights(2, rng);
        WeightSeq mu = random_weights(2, rng);
        WeightSeq prod;
        for (std::size_t i = 0; i < 2; ++i)
            prod.values.push_back(lambda.values[i] * mu.values[i]);
        MultiplierSpec sl = make_multiplier_spec(lambda, base.a, base.b, base.x, base.y);
        MultiplierSpec sm = make_multiplier_spec(mu, base.a, base.b, base.x, base.y);
        MultiplierSpec sp = make_multiplier_spec(prod, base.a, base.b, base.x, base.y);
        auto [lhs, rhs] = norm_product_bound(sp, sl, sm);
        CHECK(lhs <= rhs + 1e-9 * (1.0 + lhs));
    }

    MultiplierSpec zero = std_diag_spec(cvec({0.0, 0.0}));
    auto [l, r] = norm_product_bound(zero, zero, std_diag_spec(cvec({1.0, 1.0})));
    CHECK(l == 0.0);
    CHECK(r == 0.0);
}

TEST_CASE("tail compactness") {
    Rng rng(281);
    MultiplierSpec spec = random_onb_spec(1, 6, rng);
    // geometric weights r = 1/2
    for (std::size_t n = 0; n < 6; ++n)
        spec.lambda.values[n] = std::pow(0.5, static_cast<double>(n + 1));
    spec.lambda.tag = WeightSeq::ClassTag::c0;

    auto [full, fullBound] = tail_compactness(spec, 6);
    CHECK(full == 0.0);
    CHECK(fullBound == 0.0);

    auto [all, allBound] = tail_compactness(spec, 0);
    CHECK(all == doctest::Approx(operator_norm(assemble(spec))).epsilon(1e-12));
    CHECK(allBound == doctest::Approx(existence_bound(spec)).epsilon(1e-12));

    double prevBound = std::numeric_limits<double>::infinity();
    for (Eigen::Index m = 0; m <= 6; ++m) {
        auto [lhs, rhs] = tail_compactness(spec, m);
        CHECK(lhs <= rhs + 1e-10 * (1.0 + lhs));
        CHECK(rhs <= prevBound + 1e-15);
        prevBound = rhs;
    }
}

TEST_CASE("nuclear bound") {
    Rng rng(291);
    for (int t = 0; t < 200; ++t) {
        MultiplierSpec spec = random_spec(4, 2, 3, rng);
        spec.lambda.tag = WeightSeq::ClassTag::l1;
        auto [lhs, rhs] = nuclear_bound(spec);
        CHECK(lhs <= rhs + 1e-9 * (1.0 + lhs));
    }

    MultiplierSpec single = random_spec(4, 2, 3, rng);
    single.lambda.tag = WeightSeq::ClassTag::l1;
    single.lambda.values = {Complex(0.0, 0.0), Complex(2.0, 1.0), Complex(0.0, 0.0)};
    auto [lhs, rhs] = nuclear_bound(single);
    const double expected = std::abs(single.lambda.values[1]) *
                            (single.a.ops[1].adjoint() * single.x.vecs[1]).norm() *
                            (single.b.ops[1].adjoint() * single.y.vecs[1]).norm();
    CHECK(lhs == doctest::Approx(expected).epsilon(1e-10));
    CHECK(lhs <= rhs + 1e-12);

    MultiplierSpec wrongTag = random_spec(3, 1, 2, rng);
    CHECK_THROWS_AS(nuclear_bound(wrongTag), PreconditionFailed);
}

TEST_CASE("hilbert-schmidt bound and the exact identity") {
    MultiplierSpec diag = std_diag_spec(cvec({2.0, 3.0}));
    diag.lambda.tag = WeightSeq::ClassTag::l2;
    auto [sigma, bound] = hs_bound(diag);
    CHECK(sigma == doctest::Approx(std::sqrt(13.0)).epsilon(1e-12));
    CHECK(sigma <= bound + 1e-12);
    CHECK(hs_identity_value(diag) == doctest::Approx(std::sqrt(13.0)).epsilon(1e-12));

    Rng rng(301);
    for (int t = 0; t < 50; ++t) {
        MultiplierSpec spec = random_onb_spec(2, 3, rng);
        spec.lambda.tag = WeightSeq::ClassTag::l2;
        auto [s, b] = hs_bound(spec);
        CHECK(s <= b + 1e-9 * (1.0 + s));
        CHECK(s == doctest::Approx(hs_identity_value(spec)).epsilon(1e-9));
    }

    MultiplierSpec notOrtho = random_spec(4, 2, 2, rng);
    notOrtho.lambda.tag = WeightSeq::ClassTag::l2;
    CHECK_THROWS_AS(hs_bound(notOrtho), PreconditionFailed);
}

TEST_CASE("convergence study in all three norms") {
    Rng rng(311);
    MultiplierSpec spec = random_onb_spec(2, 3, rng);

    std::vector<WeightSeq> constant(5, spec.lambda);
    for (auto mode : {ConvergenceMode::operator_norm, ConvergenceMode::nuclear,
                      ConvergenceMode::hs}) {
        auto res = convergence_study(spec, constant, mode);
        for (const auto& [dist, bound] : res) {
            CHECK(dist == 0.0);
            CHECK(bound == 0.0);
        }
    }

    std::vector<WeightSeq> family;
    for (int k = 1; k <= 20; ++k) {
        WeightSeq w = spec.lambda;
        w.values[0] += 1.0 / static_cast<double>(k);
        family.push_back(w);
    }
    double prev = std::numeric_limits<double>::infinity();
    auto res = convergence_study(spec, family, ConvergenceMode::operator_norm);
    for (const auto& [dist, bound] : res) {
        CHECK(dist <= bound + 1e-10 * (1.0 + dist));
        CHECK(dist < prev);
        prev = dist;
    }

    // on the diagonal instance the hs distance is exactly the l2 weight distance
    MultiplierSpec diag = std_diag_spec(cvec({1.0, 2.0, 3.0}));
    std::vector<WeightSeq> dfam;
    WeightSeq w = diag.lambda;
    w.values[0] += 0.25;
    w.values[2] += Complex(0.0, 0.5);
    dfam.push_back(w);
    auto dres = convergence_study(diag, dfam, ConvergenceMode::hs);
    CHECK(dres[0].first ==
          doctest::Approx(std::sqrt(0.25 * 0.25 + 0.5 * 0.5)).epsilon(1e-12));
    CHECK(dres[0].first <= dres[0].second + 1e-12);
}

TEST_CASE("lower bound sandwich") {
    MultiplierSpec diag = std_diag_spec(cvec({2.0, 3.0}));
    LowerBoundResult r = lower_bound(diag, {});
    CHECK(r.probe_lower == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.closed_form_lower == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.upper == doctest::Approx(3.0).epsilon(1e-12));

    MultiplierSpec zero = std_diag_spec(cvec({0.0, 0.0}));
    r = lower_bound(zero, {});
    CHECK(r.probe_lower == 0.0);
    CHECK(r.upper == 0.0);

    Rng rng(321);
    for (int t = 0; t < 25; ++t) {
        MultiplierSpec spec = riesz_spec(2, 3, rng, 20.0);
        std::vector<ComplexVector> probes;
        for (int p = 0; p < 50; ++p) probes.push_back(rng.unit_vector(2));
        r = lower_bound(spec, probes);
        const double norm = operator_norm(assemble(spec));
        CHECK(r.probe_lower <= norm * (1.0 + 1e-10) + 1e-12);
        CHECK(r.closed_form_lower <= norm * (1.0 + 1e-10) + 1e-12);
        CHECK(norm <= r.upper + 1e-9 * (1.0 + norm));
    }

    CHECK_THROWS_AS(lower_bound(diag, {ComplexVector::Zero(1)}), ZeroProbe);
}

TEST_CASE("lambda recovery round-trips") {
    MultiplierSpec diag = std_diag_spec(cvec({Complex(2, 0), Complex(0, 3)}));
    WeightSeq rec = recover_lambda(assemble(diag), diag.a, diag.b, diag.x, diag.y);
    CHECK(std::abs(rec.values[0] - Complex(2, 0)) <= 1e-12);
    CHECK(std::abs(rec.values[1] - Complex(0, 3)) <= 1e-12);

    WeightSeq zero = recover_lambda(ComplexMatrix::Zero(2, 2), diag.a, diag.b,
                                    diag.x, diag.y);
    for (const auto& v : zero.values) CHECK(std::abs(v) == 0.0);

    Rng rng(331);
    for (int t = 0; t < 50; ++t) {
        MultiplierSpec spec = riesz_spec(2, 3, rng, 50.0);
        WeightSeq out = recover_lambda(assemble(spec), spec.a, spec.b, spec.x, spec.y);
        for (std::size_t n = 0; n < out.values.size(); ++n)
            CHECK(std::abs(out.values[n] - spec.lambda.values[n]) <=
                  1e-8 * (1.0 + std::abs(spec.lambda.values[n])));
    }

    MultiplierSpec bad = riesz_spec(2, 3, rng, 10.0);
    bad.x.vecs[1].setZero();
    CHECK_THROWS_AS(
        recover_lambda(assemble(bad), bad.a, bad.b, bad.x, bad.y), ZeroVector);
}

TEST_CASE("unbounded sweep") {
    std::vector<Eigen::Index> sizes{2, 4, 8, 16};

    TailLaw one{TailLaw::Kind::power, 0.0}; // lambda_n = 1
    for (const auto& [n, norm] : unbounded_sweep(one, 1, sizes, 5))
        CHECK(norm <= 1.0 + 1e-12);

    TailLaw linear{TailLaw::Kind::power, 1.0}; // lambda_n = n
    for (const auto& [n, norm] : unbounded_sweep(linear, 1, sizes, 5))
        CHECK(norm == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));

    TailLaw inv{TailLaw::Kind::power, -1.0}; // lambda_n = 1/n
    for (const auto& [n, norm] : unbounded_sweep(inv, 1, sizes, 5))
        CHECK(norm <= 1.0 + 1e-12);

    for (const auto& [n, norm] :
         unbounded_sweep(linear, 2, sizes, 7, SweepData::haar))
        CHECK(norm >= static_cast<double>(n) * (1.0 - 1e-9));
}

TEST_CASE("linearity ledger across all five data slots") {
    Rng rng(341);
    const Complex alpha(0.8, -1.1);
    for (int t = 0; t < 50; ++t) {
        MultiplierSpec spec = random_spec(5, 2, 3, rng);
        const ComplexMatrix m = assemble(spec);
        const double tol = 1e-10 * (1.0 + m.norm());

        MultiplierSpec s = spec;
        for (auto& v : s.lambda.values) v *= alpha;
        CHECK((assemble(s) - alpha * m).norm() <= tol);

        s = spec;
        for (auto& v : s.x.vecs) v *= alpha;
        CHECK((assemble(s) - alpha * m).norm() <= tol);

        s = spec;
        for (auto& op : s.b.ops) op *= alpha;
        CHECK((assemble(s) - alpha * m).norm() <= tol);

        s = spec;
        for (auto& op : s.a.ops) op *= alpha;
        CHECK((assemble(s) - std::conj(alpha) * m).norm() <= tol);

        s = spec;
        for (auto& v : s.y.vecs) v *= alpha;
        CHECK((assemble(s) - std::conj(alpha) * m).norm() <= tol);

        // additivity in each slot
        MultiplierSpec other = random_spec(5, 2, 3, rng);

        s = spec;
        for (std::size_t i = 0; i < 3; ++i)
            s.lambda.values[i] += other.lambda.values[i];
        CHECK((assemble(s) - m -
               assemble(make_multiplier_spec(other.lambda, spec.a, spec.b, spec.x,
                                             spec.y)))
                  .norm() <= tol);

        s = spec;
        for (std::size_t i = 0; i < 3; ++i) s.a.ops[i] += other.a.ops[i];
        CHECK((assemble(s) - m -
               assemble(make_multiplier_spec(spec.lambda, other.a, spec.b, spec.x,
                                             spec.y)))
                  .norm() <= tol);

        s = spec;
        for (std::size_t i = 0; i < 3; ++i) s.b.ops[i] += other.b.ops[i];
        CHECK((assemble(s) - m -
               assemble(make_multiplier_spec(spec.lambda, spec.a, other.b, spec.x,
                                             spec.y)))
                  .norm() <= tol);

        s = spec;
        for (std::size_t i = 0; i < 3; ++i) s.x.vecs[i] += other.x.vecs[i];
        CHECK((assemble(s) - m -
               assemble(make_multiplier_spec(spec.lambda, spec.a, spec.b, other.x,
                                             spec.y)))
                  .norm() <= tol);

        s = spec;
        for (std::size_t i = 0; i < 3; ++i) s.y.vecs[i] += other.y.vecs[i];
        CHECK((assemble(s) - m -
               assemble(make_multiplier_spec(spec.lambda, spec.a, spec.b, spec.x,
                                             other.y)))
                  .norm() <= tol);
    }
}

TEST_CASE("normality with orthogonal shared data") {
    Rng rng(351);
    for (int t = 0; t < 25; ++t) {
        OpSequence f = random_onb(2, 3, rng.integer(1u << 30));
        VectorSeq x = random_vector_seq(2, 3, rng);
        MultiplierSpec spec =
            make_multiplier_spec(random_weights(3, rng), f, f, x, x);
        const ComplexMatrix m = assemble(spec);
        const double scale = operator_norm(m);
        CHECK((m * m.adjoint() - m.adjoint() * m).norm() <=
              1e-9 * (1.0 + scale * scale));
    }
}

TEST_CASE("degenerate weight cases") {
    // zero weights collapse the class bounds to (0, 0)
    MultiplierSpec zero = std_diag_spec(cvec({0.0, 0.0}));
    zero.lambda.tag = WeightSeq::ClassTag::l2;
    auto [hl, hr] = hs_bound(zero);
    CHECK(hl == 0.0);
    CHECK(hr == 0.0);
    zero.lambda.tag = WeightSeq::ClassTag::l1;
    auto [nl, nr] = nuclear_bound(zero);
    CHECK(nl == 0.0);
    CHECK(nr == 0.0);

    auto [g, groot] = mstarm_reduction(zero);
    for (const auto& v : g.values) CHECK(std::abs(v) == 0.0);

    // with mu identically one the product bound collapses to ||M_lambda||
    MultiplierSpec sl = std_diag_spec(cvec({Complex(0.3, 0.4), Complex(0.2, 0.0)}));
    MultiplierSpec ones = std_diag_spec(cvec({1.0, 1.0}));
    auto [lhs, rhs] = norm_product_bound(sl, sl, ones);
    CHECK(lhs == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rhs == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("compose_maps rejects mismatched arguments") {
    Rng rng(361);
    MultiplierSpec spec = random_spec(4, 2, 3, rng);
    std::vector<ComplexMatrix> wrongCount(2, ComplexMatrix::Identity(2, 2));
    CHECK_THROWS_AS(compose_maps(spec, ComposeSite::tb, ComposeArg(wrongCount)),
                    DimMismatch);
    std::vector<ComplexMatrix> wrongDim(3, ComplexMatrix::Identity(3, 3));
    CHECK_THROWS_AS(compose_maps(spec, ComposeSite::ty, ComposeArg(wrongDim)),
                    DimMismatch);
    CHECK_THROWS_AS(
        compose_maps(spec, ComposeSite::bs,
                     ComposeArg(ComplexMatrix(ComplexMatrix::Identity(3, 3)))),
        DimMismatch);
    CHECK_THROWS_AS(compose_maps(spec, ComposeSite::as_site, ComposeArg(wrongDim)),
                    DimMismatch);
}

TEST_CASE("weight sequence norms include the tails") {
    WeightSeq w;
    w.values = {Complex(1.0, 0.0), Complex(-0.5, 0.0)};
    w.tail = TailLaw{TailLaw::Kind::geometric, 0.5};
    CHECK(w.sup_norm() == doctest::Approx(1.0));
    CHECK(w.sup_beyond(2) == doctest::Approx(0.125)); // tail at n = 3
    CHECK(w.l1_norm() == doctest::Approx(1.5 + 0.125 / 0.5));
    const double tail2 = std::sqrt(std::pow(0.5, 6.0) / 0.75);
    CHECK(w.l2_norm() == doctest::Approx(std::sqrt(1.25 + tail2 * tail2)));
}
