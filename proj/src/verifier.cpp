#include "gmult/verifier.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "gmult/instances.hpp"
#include "gmult/schatten.hpp"

namespace gmult {

namespace {

// ---------------------------------------------------------------------------
// helpers shared by the suite runners

struct SuiteEnv {
    const Scenario& sc;
    RecordSink sink;
    Rng rng;

    SuiteEnv(const Scenario& sc_, std::vector<CheckRecord>& out,
             const std::string& name)
        : sc(sc_), sink(out, name, sc_.tolerance),
          rng(mix_seed(sc_.seed, name)) {}
};

nlohmann::json spec_instance(const MultiplierSpec& spec) {
    return multiplier_spec_to_json(spec);
}

MultiplierSpec scenario_random_spec(SuiteEnv& env) {
    return random_spec(env.sc.d, env.sc.d0, env.sc.n, env.rng);
}

std::optional<MultiplierSpec> override_spec(const Scenario& sc) {
    if (sc.generator_overrides.contains("multiplierSpec"))
        return multiplier_spec_from_json(sc.generator_overrides["multiplierSpec"]);
    return std::nullopt;
}

GhsContext scenario_phase_context(const Scenario& sc) {
    if (sc.generator_overrides.contains("ghsContext"))
        return ghs_context_from_json(sc.generator_overrides["ghsContext"]);
    return phase_context(sc.d, 0.9, 1.25, mix_seed(sc.seed, "phase-context"));
}

// ---------------------------------------------------------------------------
// gbessel suites

void run_frame_operator(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "frame_operator");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        OpSequence a = random_bessel_sequence(sc.d, sc.d0, sc.n, env.rng);
        env.sink.set_instance(op_sequence_to_json(a));
        const ComplexMatrix s = frame_operator(a);
        env.sink.identity("hermitian", "bessel:frame-operator",
                          (s - s.adjoint()).norm(), 0.0, s.norm());
        env.sink.inequality("psd", "bessel:frame-operator",
                            -hermitian_eigenvalues(s).minCoeff(), 0.0, s.norm());
        double worst = 0.0, scale = 0.0;
        for (int k = 0; k < 10; ++k) {
            const ComplexVector h = env.rng.gaussian_vector(sc.d);
            double direct = 0.0;
            for (const auto& op : a.ops) direct += (op * h).squaredNorm();
            worst = std::max(worst,
                             std::abs(inner(ComplexVector(s * h), h).real() - direct));
            scale = std::max(scale, direct);
        }
        env.sink.identity("quadratic-form", "bessel:frame-operator", worst, 0.0,
                          scale);
    }
}

void run_optimal_bessel_bound(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "optimal_bessel_bound");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        OpSequence a = random_bessel_sequence(sc.d, sc.d0, sc.n, env.rng);
        env.sink.set_instance(op_sequence_to_json(a));
        const double b = optimal_bessel_bound(a);
        double worst = 0.0;
        for (int k = 0; k < 50; ++k) {
            const ComplexVector h = env.rng.unit_vector(sc.d);
            double sum = 0.0;
            for (const auto& op : a.ops) sum += (op * h).squaredNorm();
            worst = std::max(worst, sum);
        }
        env.sink.inequality("least-upper", "bessel:optimal-bound", worst, b, b);
        // the top eigenvector attains the bound
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(frame_operator(a));
        const ComplexVector top = es.eigenvectors().col(sc.d - 1);
        double attained = 0.0;
        for (const auto& op : a.ops) attained += (op * top).squaredNorm();
        env.sink.identity("attained", "bessel:optimal-bound", attained, b, b);
        // remark: ||A_n||^2 <= b for every term
        double worstOp = 0.0;
        for (const auto& op : a.ops)
            worstOp = std::max(worstOp, operator_norm(op));
        env.sink.inequality("term-norm", "bessel:optimal-bound", worstOp * worstOp,
                            b, b);
    }
}

void run_classify(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "classify");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        OpSequence f = random_onb(sc.d0, sc.n, env.rng.integer(1ull << 62));
        env.sink.set_instance(op_sequence_to_json(f));
        SequenceClassification c = classify(f, sc.tolerance);
        env.sink.identity("onb-flag", "bessel:classification",
                          c.is_orthonormal_basis ? 1.0 : 0.0, 1.0, 1.0);
        env.sink.identity("chain", "bessel:classification",
                          (c.is_orthonormal_basis && !c.is_orthonormal_sequence) ||
                                  (c.is_orthonormal_sequence && !c.is_orthogonal)
                              ? 1.0
                              : 0.0,
                          0.0, 1.0);

        const ComplexMatrix t0 = env.rng.invertible_matrix(sc.d, 40.0);
        OpSequence riesz = f;
        for (auto& op : riesz.ops) op = op * t0;
        SequenceClassification rc = classify(riesz, sc.tolerance);
        Eigen::VectorXd sv = singular_values(t0);
        if (rc.riesz_bounds.has_value()) {
            env.sink.identity("riesz-lower", "bessel:classification",
                              rc.riesz_bounds->first,
                              sv(sv.size() - 1) * sv(sv.size() - 1), 1.0);
            env.sink.identity("riesz-upper", "bessel:classification",
                              rc.riesz_bounds->second, sv(0) * sv(0), sv(0) * sv(0));
        } else {
            env.sink.identity("riesz-present", "bessel:classification", 0.0, 1.0,
                              1.0);
        }
    }
    if (sc.generator_overrides.contains("opSequence")) {
        env.sink.set_trial(sc.trials);
        OpSequence a = op_sequence_from_json(sc.generator_overrides["opSequence"]);
        env.sink.set_instance(op_sequence_to_json(a));
        const double b = optimal_bessel_bound(a);
        double worstOp = 0.0;
        for (const auto& op : a.ops) worstOp = std::max(worstOp, operator_norm(op));
        env.sink.inequality("override-term-norm", "bessel:classification",
                            worstOp * worstOp, b, b);
    }
}

void run_random_onb(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "random_onb");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        const std::uint64_t seed = env.rng.integer(1ull << 62);
        OpSequence f = random_onb(sc.d0, sc.n, seed);
        OpSequence g = random_onb(sc.d0, sc.n, seed);
        env.sink.set_instance(op_sequence_to_json(f));
        double diff = 0.0, ortho = 0.0;
        const ComplexMatrix id = ComplexMatrix::Identity(sc.d0, sc.d0);
        for (std::size_t i = 0; i < f.ops.size(); ++i) {
            diff = std::max(diff, (f.ops[i] - g.ops[i]).norm());
            for (std::size_t j = 0; j < f.ops.size(); ++j) {
                const ComplexMatrix p = f.ops[i] * f.ops[j].adjoint();
                ortho = std::max(ortho,
                                 (i == j ? (p - id).norm() : p.norm()));
            }
        }
        env.sink.identity("determinism", "bessel:onb-generator", diff, 0.0, 0.0);
        env.sink.identity("block-orthonormal", "bessel:onb-generator", ortho, 0.0,
                          1.0);
        env.sink.identity("classifies", "bessel:onb-generator",
                          classify(f, sc.tolerance).is_orthonormal_basis ? 1.0 : 0.0,
                          1.0, 1.0);
    }
}

void run_onb_transition(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "onb_transition_unitary");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        OpSequence b = random_onb(sc.d0, sc.n, env.rng.integer(1ull << 62));
        const ComplexMatrix u0 = env.rng.haar_unitary(sc.d);
        OpSequence a = b;
        for (auto& op : a.ops) op = op * u0;
        env.sink.set_instance(
            {{"B", op_sequence_to_json(b)}, {"U0", matrix_to_json(u0)}});
        const ComplexMatrix u = onb_transition_unitary(b, a, sc.tolerance);
        env.sink.identity("recovers-planted", "bessel:onb-transition",
                          (u - u0).norm(), 0.0, 1.0);
        env.sink.identity("unitary", "bessel:onb-transition",
                          (u.adjoint() * u -
                           ComplexMatrix::Identity(sc.d, sc.d))
                              .norm(),
                          0.0, 1.0);
        double rep = 0.0;
        for (std::size_t i = 0; i < a.ops.size(); ++i)
            rep = std::max(rep, (a.ops[i] - b.ops[i] * u).norm());
        env.sink.identity("reproduces", "bessel:onb-transition", rep, 0.0, 1.0);
    }
}

void run_riesz_transition(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "riesz_transition");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        OpSequence f = random_onb(sc.d0, sc.n, env.rng.integer(1ull << 62));
        const ComplexMatrix t0 = env.rng.invertible_matrix(sc.d, 50.0);
        OpSequence a = f;
        for (auto& op : a.ops) op = op * t0;
        env.sink.set_instance(
            {{"F", op_sequence_to_json(f)}, {"T0", matrix_to_json(t0)}});
        const ComplexMatrix tr = riesz_transition(f, a, sc.tolerance);
        env.sink.identity("recovers-planted", "bessel:riesz-transition",
                          (tr - t0).norm(), 0.0, 1.0 + t0.norm());
        double rep = 0.0;
        for (std::size_t i = 0; i < a.ops.size(); ++i)
            rep = std::max(rep, (a.ops[i] - f.ops[i] * tr).norm());
        env.sink.identity("reproduces", "bessel:riesz-transition", rep, 0.0,
                          1.0 + t0.norm());
    }
}

// ---------------------------------------------------------------------------
// multiplier suites

void run_assemble(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "assemble");
    const Complex alpha(0.6, -0.8);
    const std::optional<MultiplierSpec> overridden = override_spec(sc);
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec spec = (t == 0 && overridden.has_value())
                                  ? *overridden
                                  : scenario_random_spec(env);
        env.sink.set_instance(spec_instance(spec));
        const ComplexMatrix m = assemble(spec);
        const auto u = carrier_vectors(spec.a, spec.x);
        const auto v = carrier_vectors(spec.b, spec.y);
        double worst = 0.0, scale = 0.0;
        for (int k = 0; k < 10; ++k) {
            const ComplexVector h = env.rng.gaussian_vector(spec.dim());
            ComplexVector direct = ComplexVector::Zero(spec.dim());
            for (std::size_t i = 0; i < u.size(); ++i)
                direct += spec.lambda.values[i] * inner(h, v[i]) * u[i];
            worst = std::max(worst, (m * h - direct).norm());
            scale = std::max(scale, direct.norm());
        }
        env.sink.identity("action", "multiplier:assembly", worst, 0.0, scale);
        const double norm = operator_norm(m);
        env.sink.inequality("existence", "multiplier:assembly", norm,
                            existence_bound(spec), norm);

        // linearity ledger in each data slot
        MultiplierSpec s = spec;
        for (auto& w : s.lambda.values) w *= alpha;
        env.sink.identity("linear-weights", "multiplier:linearity",
                          (assemble(s) - alpha * m).norm(), 0.0, norm);
        s = spec;
        for (auto& vec : s.x.vecs) vec *= alpha;
        env.sink.identity("linear-x", "multiplier:linearity",
                          (assemble(s) - alpha * m).norm(), 0.0, norm);
        s = spec;
        for (auto& op : s.b.ops) op *= alpha;
        env.sink.identity("linear-b", "multiplier:linearity",
                          (assemble(s) - alpha * m).norm(), 0.0, norm);
        s = spec;
        for (auto& op : s.a.ops) op *= alpha;
        env.sink.identity("antilinear-a", "multiplier:linearity",
                          (assemble(s) - std::conj(alpha) * m).norm(), 0.0, norm);
        s = spec;
        for (auto& vec : s.y.vecs) vec *= alpha;
        env.sink.identity("antilinear-y", "multiplier:linearity",
                          (assemble(s) - std::conj(alpha) * m).norm(), 0.0, norm);

        MultiplierSpec other = scenario_random_spec(env);
        MultiplierSpec sum = spec;
        for (Eigen::Index i = 0; i < spec.terms(); ++i)
            sum.lambda.values[static_cast<std::size_t>(i)] +=
                other.lambda.values[static_cast<std::size_t>(i)];
        env.sink.identity(
            "additive-weights", "multiplier:linearity",
            (assemble(sum) - m -
             assemble(make_multiplier_spec(other.lambda, spec.a, spec.b, spec.x,
                                           spec.y)))
                .norm(),
            0.0, norm);
    }
}

void run_existence_bound(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "existence_bound");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec spec = scenario_random_spec(env);
        env.sink.set_instance(spec_instance(spec));
        const double norm = operator_norm(assemble(spec));
        env.sink.inequality("bound", "multiplier:existence-bound", norm,
                            existence_bound(spec), norm);
    }
}

void run_multiplier_adjoint(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "multiplier_adjoint");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec spec = scenario_random_spec(env);
        env.sink.set_instance(spec_instance(spec));
        const ComplexMatrix m = assemble(spec);
        env.sink.identity("adjoint", "multiplier:adjoint",
                          (assemble(multiplier_adjoint(spec)) - m.adjoint()).norm(),
                          0.0, m.norm());
        env.sink.identity("involution", "multiplier:adjoint",
                          (assemble(multiplier_adjoint(multiplier_adjoint(spec))) -
                           m)
                              .norm(),
                          0.0, 0.0);

        // self-adjoint and normal special cases with shared data
        OpSequence f = random_onb(sc.d0, sc.n, env.rng.integer(1ull << 62));
        VectorSeq x = random_vector_seq(sc.d0, sc.n, env.rng);
        WeightSeq real = random_weights(sc.n, env.rng);
        for (auto& w : real.values) w = Complex(w.real(), 0.0);
        MultiplierSpec sym = make_multiplier_spec(real, f, f, x, x);
        const ComplexMatrix ms = assemble(sym);
        env.sink.identity("self-adjoint", "multiplier:adjoint",
                          (ms - ms.adjoint()).norm(), 0.0, ms.norm());
        MultiplierSpec nrm =
            make_multiplier_spec(random_weights(sc.n, env.rng), f, f, x, x);
        const ComplexMatrix mn = assemble(nrm);
        env.sink.identity("normal", "multiplier:normality",
                          (mn * mn.adjoint() - mn.adjoint() * mn).norm(), 0.0,
                          mn.norm() * mn.norm());
    }
}

void run_mmstar(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "mmstar_reduction");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec spec = random_onb_spec(sc.d0, sc.n, env.rng);
        env.sink.set_instance(spec_instance(spec));
        const ComplexMatrix m = assemble(spec);
        const double scale = 1.0 + m.norm() * m.norm();
        auto [mu, root] = mmstar_reduction(spec);
        env.sink.identity("product-reduction", "multiplier:mmstar-reduction",
                          (m * m.adjoint() -
                           assemble(make_multiplier_spec(mu, spec.a, spec.a,
                                                         spec.x, spec.x)))
                              .norm(),
                          0.0, scale);
        if (root.has_value()) {
            const ComplexMatrix r = assemble(
                make_multiplier_spec(*root, spec.a, spec.a, spec.x, spec.x));
            env.sink.identity("root-squares", "multiplier:mmstar-reduction",
                              (r * r - m * m.adjoint()).norm(), 0.0, scale);
            env.sink.inequality("root-psd", "multiplier:mmstar-reduction",
                                -hermitian_eigenvalues(
                                     ComplexMatrix((r + r.adjoint()) / 2.0))
                                     .minCoeff(),
                                0.0, scale);
        } else {
            env.sink.skip("root-squares", "multiplier:mmstar-reduction",
                          "some x_n vanishes, square-root weights undefined");
        }
    }
}

void run_mstarm(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "mstarm_reduction");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec spec = random_onb_spec(sc.d0, sc.n, env.rng);
        env.sink.set_instance(spec_instance(spec));
        const ComplexMatrix m = assemble(spec);
        const double scale = 1.0 + m.norm() * m.norm();
        auto [gamma, root] = mstarm_reduction(spec);
        env.sink.identity("product-reduction", "multiplier:mstarm-reduction",
                          (m.adjoint() * m -
                           assemble(make_multiplier_spec(gamma, spec.b, spec.b,
                                                         spec.y, spec.y)))
                              .norm(),
                          0.0, scale);
        if (root.has_value()) {
            const ComplexMatrix r = assemble(
                make_multiplier_spec(*root, spec.b, spec.b, spec.y, spec.y));
            env.sink.identity("root-squares", "multiplier:mstarm-reduction",
                              (r * r - m.adjoint() * m).norm(), 0.0, scale);
        } else {
            env.sink.skip("root-squares", "multiplier:mstarm-reduction",
                          "some y_n vanishes, square-root weights undefined");
        }
    }
}

void run_power_formula(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "power_formula");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec spec = biorthogonal_spec(sc.d0, sc.n, env.rng);
        env.sink.set_instance(spec_instance(spec));
        const ComplexMatrix m = assemble(spec);
        ComplexMatrix mk = m;
        for (int k = 2; k <= 4; ++k) {
            mk = mk * m;
            env.sink.identity("power-" + std::to_string(k),
                              "multiplier:power-closed-form",
                              (power_formula(spec, k) - mk).norm(), 0.0,
                              1.0 + mk.norm());
        }
    }
}

void run_symbolic_product(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "symbolic_product");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec s1 = biorthogonal_spec(sc.d0, sc.n, env.rng);
        MultiplierSpec s2 = s1;
        s2.lambda = random_weights(sc.n, env.rng);
        env.sink.set_instance(spec_instance(s1));
        const ComplexMatrix direct = assemble(s1) * assemble(s2);
        env.sink.identity("product", "multiplier:symbolic-calculus",
                          (assemble(symbolic_product(s1, s2)) - direct).norm(),
                          0.0, 1.0 + direct.norm());
    }
}

void run_compose_maps(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "compose_maps");
    const char* names[] = {"tb", "bs", "ta", "as", "ty", "tx"};
    const ComposeSite sites[] = {ComposeSite::tb, ComposeSite::bs,
                                 ComposeSite::ta, ComposeSite::as_site,
                                 ComposeSite::ty, ComposeSite::tx};
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec spec = scenario_random_spec(env);
        env.sink.set_instance(spec_instance(spec));
        std::vector<ComplexMatrix> tlist;
        for (Eigen::Index i = 0; i < sc.n; ++i)
            tlist.push_back(env.rng.gaussian_matrix(sc.d0, sc.d0));
        const ComplexMatrix s = env.rng.gaussian_matrix(spec.dim(), spec.dim());
        for (int i = 0; i < 6; ++i) {
            const ComposeArg arg =
                (sites[i] == ComposeSite::bs || sites[i] == ComposeSite::as_site)
                    ? ComposeArg(s)
                    : ComposeArg(tlist);
            const ComplexMatrix lhs = assemble(compose_site_lhs(spec, sites[i], arg));
            const ComposedMultiplier rhs = compose_maps(spec, sites[i], arg);
            env.sink.identity(std::string("site-") + names[i],
                              "multiplier:map-composition",
                              (lhs - rhs.left * assemble(rhs.spec) * rhs.right)
                                  .norm(),
                              0.0, 1.0 + lhs.norm());
        }
    }
}

void run_product_general(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "product_general");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        auto [s1, s2] = biorthogonal_product_pair(sc.d0, sc.n, env.rng);
        env.sink.set_instance(
            {{"s1", spec_instance(s1)}, {"s2", spec_instance(s2)}});
        const ComplexMatrix direct = assemble(s1) * assemble(s2);
        env.sink.identity("closed-form", "multiplier:general-product",
                          (product_general(s1, s2) - direct).norm(), 0.0,
                          1.0 + direct.norm());
    }
}

void run_norm_product_bound(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "norm_product_bound");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec base = random_onb_spec(sc.d0, sc.n, env.rng);
        WeightSeq lambda = random_weights(sc.n, env.rng);
        WeightSeq mu = random_weights(sc.n, env.rng);
        WeightSeq prod;
        for (Eigen::Index i = 0; i < sc.n; ++i)
            prod.values.push_back(lambda.values[static_cast<std::size_t>(i)] *
                                  mu.values[static_cast<std::size_t>(i)]);
        MultiplierSpec sl =
            make_multiplier_spec(lambda, base.a, base.b, base.x, base.y);
        MultiplierSpec sm = make_multiplier_spec(mu, base.a, base.b, base.x, base.y);
        MultiplierSpec sp =
            make_multiplier_spec(prod, base.a, base.b, base.x, base.y);
        env.sink.set_instance(spec_instance(sp));
        auto [lhs, rhs] = norm_product_bound(sp, sl, sm);
        env.sink.inequality("min-bound", "multiplier:weighted-norm-bound", lhs,
                            rhs, lhs + rhs);
    }
}

void run_tail_compactness(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "tail_compactness");
    const std::optional<MultiplierSpec> overridden = override_spec(sc);
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec spec = (t == 0 && overridden.has_value())
                                  ? *overridden
                                  : random_onb_spec(sc.d0, sc.n, env.rng);
        if (t == 0 && sc.generator_overrides.contains("weights")) {
            WeightSeq w = weights_from_json(sc.generator_overrides["weights"]);
            if (w.terms() != spec.terms())
                throw DimMismatch(
                    "tail_compactness: override weights length mismatch");
            spec.lambda = std::move(w);
        } else {
            for (Eigen::Index i = 0; i < spec.terms(); ++i)
                spec.lambda.values[static_cast<std::size_t>(i)] =
                    std::pow(0.5, static_cast<double>(i + 1));
            spec.lambda.tag = WeightSeq::ClassTag::c0;
        }
        env.sink.set_instance(spec_instance(spec));
        double prev = std::numeric_limits<double>::infinity();
        double worstGap = -std::numeric_limits<double>::infinity();
        double monotone = 0.0;
        bool nonincreasing = true;
        for (Eigen::Index i = 1; i < spec.terms(); ++i)
            nonincreasing =
                nonincreasing &&
                std::abs(spec.lambda.values[static_cast<std::size_t>(i)]) <=
                    std::abs(spec.lambda.values[static_cast<std::size_t>(i - 1)]);
        for (Eigen::Index m = 0; m <= spec.terms(); ++m) {
            auto [lhs, rhs] = tail_compactness(spec, m);
            worstGap = std::max(worstGap, lhs - rhs);
            monotone = std::max(monotone, rhs - prev);
            prev = rhs;
        }
        env.sink.inequality("dominated", "multiplier:tail-compactness", worstGap,
                            0.0, existence_bound(spec));
        if (nonincreasing)
            env.sink.inequality("bound-monotone", "multiplier:tail-compactness",
                                monotone, 0.0, existence_bound(spec));
        else
            env.sink.skip("bound-monotone", "multiplier:tail-compactness",
                          "override weights are not nonincreasing");
    }
}

void run_nuclear_bound(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "nuclear_bound");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec spec = scenario_random_spec(env);
        spec.lambda.tag = WeightSeq::ClassTag::l1;
        env.sink.set_instance(spec_instance(spec));
        auto [lhs, rhs] = nuclear_bound(spec);
        env.sink.inequality("bound", "multiplier:nuclear-bound", lhs, rhs, lhs);
    }
}

void run_hs_bound(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "hs_bound");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec spec = random_onb_spec(sc.d0, sc.n, env.rng);
        spec.lambda.tag = WeightSeq::ClassTag::l2;
        env.sink.set_instance(spec_instance(spec));
        auto [lhs, rhs] = hs_bound(spec);
        env.sink.inequality("bound", "multiplier:hs-bound", lhs, rhs, lhs);
        env.sink.identity("exact-identity", "multiplier:hs-bound", lhs,
                          hs_identity_value(spec), lhs);
    }
}

void run_convergence_study(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "convergence_study");
    MultiplierSpec spec = random_onb_spec(sc.d0, sc.n, env.rng);
    env.sink.set_instance(spec_instance(spec));
    std::vector<WeightSeq> family;
    const int kMax = std::max(sc.trials, 5);
    for (int k = 1; k <= kMax; ++k) {
        WeightSeq w = spec.lambda;
        w.values[0] += 1.0 / static_cast<double>(k);
        family.push_back(w);
    }
    const char* names[] = {"operator", "nuclear", "hs"};
    const ConvergenceMode modes[] = {ConvergenceMode::operator_norm,
                                     ConvergenceMode::nuclear, ConvergenceMode::hs};
    for (int mode = 0; mode < 3; ++mode) {
        const auto res = convergence_study(spec, family, modes[mode]);
        double worstGap = -std::numeric_limits<double>::infinity();
        double growth = -std::numeric_limits<double>::infinity();
        double prev = std::numeric_limits<double>::infinity();
        for (const auto& [dist, bound] : res) {
            worstGap = std::max(worstGap, dist - bound);
            growth = std::max(growth, dist - prev);
            prev = dist;
        }
        env.sink.inequality(std::string("dominated-") + names[mode],
                            "multiplier:continuity", worstGap, 0.0, 1.0);
        env.sink.inequality(std::string("decreasing-") + names[mode],
                            "multiplier:continuity", growth, 0.0, 1.0);
    }
}

void run_lower_bound(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "lower_bound");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec spec = riesz_spec(sc.d0, sc.n, env.rng, 50.0);
        env.sink.set_instance(spec_instance(spec));
        std::vector<ComplexVector> probes;
        for (int p = 0; p < 20; ++p) probes.push_back(env.rng.unit_vector(sc.d0));
        const LowerBoundResult r = lower_bound(spec, probes);
        const double norm = operator_norm(assemble(spec));
        env.sink.inequality("probe-lower", "multiplier:lower-bound", r.probe_lower,
                            norm, norm);
        env.sink.inequality("closed-form-lower", "multiplier:lower-bound",
                            r.closed_form_lower, norm, norm);
        env.sink.inequality("upper", "multiplier:lower-bound", norm, r.upper,
                            norm);
    }
}

void run_recover_lambda(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "recover_lambda");
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        MultiplierSpec spec = riesz_spec(sc.d0, sc.n, env.rng, 50.0);
        env.sink.set_instance(spec_instance(spec));
        const WeightSeq rec =
            recover_lambda(assemble(spec), spec.a, spec.b, spec.x, spec.y);
        double worst = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < rec.values.size(); ++i) {
            worst = std::max(worst,
                             std::abs(rec.values[i] - spec.lambda.values[i]));
            scale = std::max(scale, std::abs(spec.lambda.values[i]));
        }
        env.sink.identity("round-trip", "multiplier:weight-recovery", worst, 0.0,
                          scale);
    }
}

void run_unbounded_sweep(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "unbounded_sweep");
    const std::vector<Eigen::Index> sizes{2, 4, 8, 16};
    env.sink.set_instance({{"sizes", {2, 4, 8, 16}}});

    const TailLaw growing =
        sc.lambda_law.value_or(TailLaw{TailLaw::Kind::power, 1.0});
    const bool unbounded =
        growing.kind == TailLaw::Kind::power && growing.param > 0.0;
    if (unbounded) {
        // with unit pair data the norm attains the largest weight
        for (const auto& [n, norm] : unbounded_sweep(growing, sc.d0, sizes, sc.seed))
            env.sink.inequality("grows-" + std::to_string(n),
                                "multiplier:boundedness-characterization",
                                growing.eval(static_cast<std::uint64_t>(n)), norm,
                                growing.eval(static_cast<std::uint64_t>(n)));
    }

    const TailLaw bounded{TailLaw::Kind::power, -1.0};
    for (const auto& [n, norm] : unbounded_sweep(bounded, sc.d0, sizes, sc.seed))
        env.sink.inequality("stays-bounded-" + std::to_string(n),
                            "multiplier:boundedness-characterization", norm, 1.0,
                            1.0);
}

// ---------------------------------------------------------------------------
// schatten suites

void run_std_context(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "std_context");
    const GhsContext ctx = std_context(sc.d);
    env.sink.set_instance(ghs_context_to_json(ctx));
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        const ComplexMatrix a = env.rng.gaussian_matrix(sc.d, sc.d);
        env.sink.identity("member", "ghs-class:canonical-reduction",
                          is_member(ctx, a, sc.tolerance).is_member ? 1.0 : 0.0,
                          1.0, 1.0);
        env.sink.identity("sigma-frobenius", "ghs-class:canonical-reduction",
                          sigma(ctx, a), frobenius_norm(a), frobenius_norm(a));
        env.sink.identity("trace-classical", "ghs-class:canonical-reduction",
                          std::abs(trace(ctx, a) - a.trace()), 0.0,
                          std::abs(a.trace()));
        env.sink.identity("tau-trace-norm", "ghs-class:canonical-reduction",
                          tau(ctx, a, sc.tolerance), trace_norm(a), trace_norm(a));
    }
    env.sink.set_trial(sc.trials);
    env.sink.identity("dimension", "ghs-class:canonical-reduction",
                      static_cast<double>(admissible_subspace(ctx).size()),
                      static_cast<double>(sc.d * sc.d), 1.0);
}

void run_is_member(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "is_member");
    const GhsContext good = scenario_phase_context(sc);
    const GhsContext bad =
        make_ghs_context(conjugation_isometry(sc.d0),
                         random_onb(sc.d0, sc.n, mix_seed(sc.seed, "bad-ctx")),
                         random_vector_seq(sc.d0, sc.n, env.rng));
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        const ComplexMatrix a = env.rng.gaussian_matrix(good.dim(), good.dim());
        env.sink.set_instance({{"context", ghs_context_to_json(good)}});
        env.sink.identity("coherent-member", "ghs-class:membership",
                          is_member(good, a, sc.tolerance).is_member ? 1.0 : 0.0,
                          1.0, 1.0);
        auto [r1, r2] = membership_residual(good, a,
                                            env.rng.gaussian_matrix(good.dim(),
                                                                    good.dim()),
                                            env.rng.gaussian_matrix(good.dim(),
                                                                    good.dim()));
        env.sink.identity("dense-agreement", "ghs-class:membership",
                          std::max(r1, r2), 0.0, frobenius_norm(a));

        const ComplexMatrix g = env.rng.gaussian_matrix(bad.dim(), bad.dim());
        const bool trivial = is_member(bad, g, sc.tolerance).is_member;
        env.sink.identity("incoherent-rejects", "ghs-class:membership",
                          trivial ? 1.0 : 0.0, 0.0, 1.0);
    }
}

void run_admissible_subspace(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "admissible_subspace");
    const GhsContext canonical = std_context(sc.d);
    const GhsContext coherent = scenario_phase_context(sc);
    const GhsContext trivial =
        make_ghs_context(conjugation_isometry(sc.d0),
                         random_onb(sc.d0, sc.n, mix_seed(sc.seed, "triv-ctx")),
                         random_vector_seq(sc.d0, sc.n, env.rng));
    env.sink.identity("canonical-dimension", "ghs-class:admissible-dimension",
                      static_cast<double>(admissible_subspace(canonical).size()),
                      static_cast<double>(sc.d * sc.d), 1.0);
    env.sink.identity("coherent-dimension", "ghs-class:admissible-dimension",
                      static_cast<double>(admissible_subspace(coherent).size()),
                      static_cast<double>(coherent.dim() * coherent.dim()), 1.0);
    const bool genericTrivial = admissible_subspace(trivial).empty();
    env.sink.identity("generic-dimension", "ghs-class:admissible-dimension",
                      genericTrivial ? 0.0 : 1.0, 0.0, 1.0);
    double worst = 0.0;
    const auto basis = admissible_subspace(coherent);
    for (const auto& e : basis)
        worst = std::max(worst,
                         std::max(is_member(coherent, e, sc.tolerance).residual_cond1,
                                  is_member(coherent, e, sc.tolerance).residual_cond2));
    env.sink.identity("basis-members", "ghs-class:admissible-dimension", worst,
                      0.0, 1.0);
}

void run_sigma(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "sigma");
    const GhsContext ctx = scenario_phase_context(sc);
    env.sink.set_instance(ghs_context_to_json(ctx));
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        const ComplexMatrix a = env.rng.gaussian_matrix(ctx.dim(), ctx.dim());
        const ComplexMatrix b = env.rng.gaussian_matrix(ctx.dim(), ctx.dim());
        const Complex alpha = env.rng.complex_gaussian();
        const double sa = sigma(ctx, a), sb = sigma(ctx, b);
        env.sink.identity("homogeneous", "ghs-class:seminorm",
                          sigma(ctx, ComplexMatrix(alpha * a)),
                          std::abs(alpha) * sa, std::abs(alpha) * sa);
        env.sink.inequality("triangle", "ghs-class:seminorm",
                            sigma(ctx, ComplexMatrix(a + b)), sa + sb, sa + sb);
    }
    double xsum = 0.0;
    for (const auto& xv : ctx.x.vecs) xsum += xv.squaredNorm();
    env.sink.set_trial(sc.trials);
    env.sink.identity("identity-value", "ghs-class:seminorm",
                      sigma(ctx, ComplexMatrix::Identity(ctx.dim(), ctx.dim())),
                      std::sqrt(xsum), std::sqrt(xsum));
}

void run_ghs_inner(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "ghs_inner");
    const GhsContext ctx = scenario_phase_context(sc);
    env.sink.set_instance(ghs_context_to_json(ctx));
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        const ComplexMatrix a = env.rng.gaussian_matrix(ctx.dim(), ctx.dim());
        const ComplexMatrix b = env.rng.gaussian_matrix(ctx.dim(), ctx.dim());
        const double sa = sigma(ctx, a), sb = sigma(ctx, b);
        env.sink.identity("gram", "ghs-inner:pairing",
                          std::abs(ghs_inner(ctx, a, a) - Complex(sa * sa, 0.0)),
                          0.0, sa * sa);
        env.sink.inequality("cauchy-schwarz", "ghs-inner:pairing",
                            std::abs(ghs_inner(ctx, a, b)), sa * sb, sa * sb);
        const double sp = sigma(ctx, ComplexMatrix(a + b));
        const double sm = sigma(ctx, ComplexMatrix(a - b));
        const double spi = sigma(ctx, ComplexMatrix(a + Complex(0, 1) * b));
        const double smi = sigma(ctx, ComplexMatrix(a - Complex(0, 1) * b));
        env.sink.identity("polarization", "ghs-inner:pairing",
                          std::abs(4.0 * ghs_inner(ctx, a, b) -
                                   Complex(sp * sp - sm * sm,
                                           spi * spi - smi * smi)),
                          0.0, 4.0 * (1.0 + sa) * (1.0 + sb));
    }
}

void run_pframe(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "pframe_lower_constant");
    env.sink.identity("canonical-p2", "ghs-class:lower-frame-constant",
                      pframe_lower_constant(std_context(sc.d), 2.0), 1.0, 1.0);
    OpSequence f = std_onb(sc.d);
    VectorSeq x;
    for (Eigen::Index i = 0; i < sc.d; ++i)
        x.vecs.push_back(env.rng.gaussian_vector(1));
    const GhsContext ctx = make_ghs_context(conjugation_isometry(1), f, x);
    env.sink.set_instance(ghs_context_to_json(ctx));
    ComplexMatrix gram = ComplexMatrix::Zero(sc.d, sc.d);
    for (const auto& p : ctx.probes) gram += p * p.adjoint();
    const double expected =
        std::sqrt(std::max(hermitian_eigenvalues(gram).minCoeff(), 0.0));
    env.sink.identity("p2-eigen-oracle", "ghs-class:lower-frame-constant",
                      pframe_lower_constant(ctx, 2.0), expected, 1.0 + expected);
}

void run_trace(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "trace");
    const GhsContext ctx = scenario_phase_context(sc);
    env.sink.set_instance(ghs_context_to_json(ctx));
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        const ComplexMatrix b = random_member(ctx, env.rng);
        const ComplexMatrix c = random_member(ctx, env.rng);
        const Complex lhs = trace(ctx, ComplexMatrix(b.adjoint() * c));
        const Complex rhs = ghs_inner(ctx, c, b);
        env.sink.identity("inner-identity", "gtrace:probe-trace",
                          std::abs(lhs - rhs), 0.0, 1.0 + std::abs(rhs));
    }
    double xsum = 0.0;
    for (const auto& xv : ctx.x.vecs) xsum += xv.squaredNorm();
    env.sink.set_trial(sc.trials);
    env.sink.identity("identity-value", "gtrace:probe-trace",
                      std::abs(trace(ctx, ComplexMatrix::Identity(ctx.dim(),
                                                                  ctx.dim())) -
                               Complex(xsum, 0.0)),
                      0.0, xsum);
}

void run_is_member_trace_class(const Scenario& sc,
                               std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "is_member_trace_class");
    const GhsContext ctx = scenario_phase_context(sc);
    env.sink.set_instance(ghs_context_to_json(ctx));
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        const ComplexMatrix prod =
            random_member(ctx, env.rng) * random_member(ctx, env.rng);
        env.sink.identity("product-member", "gtrace:membership",
                          is_member_trace_class(ctx, prod, sc.tolerance).is_member
                              ? 1.0
                              : 0.0,
                          1.0, 1.0);
    }
    env.sink.set_trial(sc.trials);
    env.sink.identity("zero-member", "gtrace:membership",
                      is_member_trace_class(
                          ctx, ComplexMatrix::Zero(ctx.dim(), ctx.dim()),
                          sc.tolerance)
                              .is_member
                          ? 1.0
                          : 0.0,
                      1.0, 1.0);
}

void run_tau(const Scenario& sc, std::vector<CheckRecord>& out) {
    SuiteEnv env(sc, out, "tau");
    const GhsContext canonical = std_context(sc.d);
    const GhsContext ctx = scenario_phase_context(sc);
    for (int t = 0; t < sc.trials; ++t) {
        env.sink.set_trial(t);
        const ComplexMatrix a = env.rng.gaussian_matrix(sc.d, sc.d);
        env.sink.set_instance({{"matrix", matrix_to_json(a)}});
        env.sink.identity("canonical-trace-norm", "gtau:value",
                          tau(canonical, a, sc.tolerance), trace_norm(a),
                          trace_norm(a));
        const ComplexMatrix m = random_member(ctx, env.rng);
        const ComplexMatrix root = sqrt_psd(matrix_abs(m), 1e-6);
        const double sr = sigma(ctx, root);
        env.sink.identity("root-sigma", "gtau:value", tau(ctx, m, sc.tolerance),
                          sr * sr, sr * sr);
    }
}

void run_library_suite(
    const Scenario& sc, std::vector<CheckRecord>& out, const char* name,
    VerificationReport (*fn)(const GhsContext&, std::uint64_t, int, double)) {
    const auto ingest = [&](VerificationReport r, const char* tag) {
        const std::string prefix = std::string(name) + "/";
        for (auto& rec : r.records) {
            if (rec.id.rfind(prefix, 0) == 0)
                rec.id = prefix + tag + "/" + rec.id.substr(prefix.size());
            out.push_back(std::move(rec));
        }
    };
    ingest(fn(std_context(sc.d), mix_seed(sc.seed, std::string(name) + "-canonical"),
              sc.trials, sc.tolerance),
           "canonical");
    ingest(fn(scenario_phase_context(sc),
              mix_seed(sc.seed, std::string(name) + "-phase"), sc.trials,
              sc.tolerance),
           "phase");
}

void run_ideal_suite(const Scenario& sc, std::vector<CheckRecord>& out) {
    run_library_suite(sc, out, "ideal_suite", &ideal_suite);
}
void run_inner_suite(const Scenario& sc, std::vector<CheckRecord>& out) {
    run_library_suite(sc, out, "inner_suite", &inner_suite);
}
void run_trace_suite(const Scenario& sc, std::vector<CheckRecord>& out) {
    run_library_suite(sc, out, "trace_suite", &trace_suite);
}
void run_tau_suite(const Scenario& sc, std::vector<CheckRecord>& out) {
    run_library_suite(sc, out, "tau_suite", &tau_suite);
}

// ---------------------------------------------------------------------------
// registry and the claim catalogue

std::vector<SuiteInfo> build_registry() {
    return {
        {"frame_operator", "bessel:frame-operator", false, run_frame_operator},
        {"optimal_bessel_bound", "bessel:optimal-bound", false,
         run_optimal_bessel_bound},
        {"classify", "bessel:classification", true, run_classify},
        {"random_onb", "bessel:onb-generator", true, run_random_onb},
        {"onb_transition_unitary", "bessel:onb-transition", true,
         run_onb_transition},
        {"riesz_transition", "bessel:riesz-transition", true,
         run_riesz_transition},
        {"assemble", "multiplier:assembly", false, run_assemble},
        {"existence_bound", "multiplier:existence-bound", false,
         run_existence_bound},
        {"multiplier_adjoint", "multiplier:adjoint", true,
         run_multiplier_adjoint},
        {"mmstar_reduction", "multiplier:mmstar-reduction", true, run_mmstar},
        {"mstarm_reduction", "multiplier:mstarm-reduction", true, run_mstarm},
        {"power_formula", "multiplier:power-closed-form", true,
         run_power_formula},
        {"symbolic_product", "multiplier:symbolic-calculus", true,
         run_symbolic_product},
        {"compose_maps", "multiplier:map-composition", false, run_compose_maps},
        {"product_general", "multiplier:general-product", true,
         run_product_general},
        {"norm_product_bound", "multiplier:weighted-norm-bound", true,
         run_norm_product_bound},
        {"tail_compactness", "multiplier:tail-compactness", true,
         run_tail_compactness},
        {"nuclear_bound", "multiplier:nuclear-bound", false, run_nuclear_bound},
        {"hs_bound", "multiplier:hs-bound", true, run_hs_bound},
        {"convergence_study", "multiplier:continuity", true,
         run_convergence_study},
        {"lower_bound", "multiplier:lower-bound", true, run_lower_bound},
        {"recover_lambda", "multiplier:weight-recovery", true,
         run_recover_lambda},
        {"unbounded_sweep", "multiplier:boundedness-characterization", true,
         run_unbounded_sweep},
        {"std_context", "ghs-class:canonical-reduction", false, run_std_context},
        {"is_member", "ghs-class:membership", true, run_is_member},
        {"admissible_subspace", "ghs-class:admissible-dimension", true,
         run_admissible_subspace},
        {"sigma", "ghs-class:seminorm", true, run_sigma},
        {"ghs_inner", "ghs-inner:pairing", true, run_ghs_inner},
        {"pframe_lower_constant", "ghs-class:lower-frame-constant", false,
         run_pframe},
        {"trace", "gtrace:probe-trace", true, run_trace},
        {"is_member_trace_class", "gtrace:membership", true,
         run_is_member_trace_class},
        {"tau", "gtau:value", true, run_tau},
        {"ideal_suite", "ghs-class:ideal", true, run_ideal_suite},
        {"inner_suite", "ghs-inner:laws", true, run_inner_suite},
        {"trace_suite", "gtrace:laws", true, run_trace_suite},
        {"tau_suite", "gtau:laws", true, run_tau_suite},
    };
}

// every catalogued claim must have a registered suite backing it
const std::vector<std::pair<const char*, const char*>> kClaimCatalogue = {
    {"bessel:frame-operator", "frame_operator"},
    {"bessel:optimal-bound", "optimal_bessel_bound"},
    {"bessel:classification", "classify"},
    {"bessel:onb-generator", "random_onb"},
    {"bessel:onb-transition", "onb_transition_unitary"},
    {"bessel:riesz-transition", "riesz_transition"},
    {"multiplier:assembly", "assemble"},
    {"multiplier:linearity", "assemble"},
    {"multiplier:existence-bound", "existence_bound"},
    {"multiplier:adjoint", "multiplier_adjoint"},
    {"multiplier:normality", "multiplier_adjoint"},
    {"multiplier:mmstar-reduction", "mmstar_reduction"},
    {"multiplier:mstarm-reduction", "mstarm_reduction"},
    {"multiplier:power-closed-form", "power_formula"},
    {"multiplier:symbolic-calculus", "symbolic_product"},
    {"multiplier:map-composition", "compose_maps"},
    {"multiplier:general-product", "product_general"},
    {"multiplier:weighted-norm-bound", "norm_product_bound"},
    {"multiplier:tail-compactness", "tail_compactness"},
    {"multiplier:nuclear-bound", "nuclear_bound"},
    {"multiplier:hs-bound", "hs_bound"},
    {"multiplier:continuity", "convergence_study"},
    {"multiplier:lower-bound", "lower_bound"},
    {"multiplier:weight-recovery", "recover_lambda"},
    {"multiplier:boundedness-characterization", "unbounded_sweep"},
    {"ghs-class:canonical-reduction", "std_context"},
    {"ghs-class:membership", "is_member"},
    {"ghs-class:admissible-dimension", "admissible_subspace"},
    {"ghs-class:seminorm", "sigma"},
    {"ghs-inner:pairing", "ghs_inner"},
    {"ghs-class:lower-frame-constant", "pframe_lower_constant"},
    {"gtrace:probe-trace", "trace"},
    {"gtrace:membership", "is_member_trace_class"},
    {"gtau:value", "tau"},
    {"ghs-class:ideal", "ideal_suite"},
    {"ghs-inner:laws", "inner_suite"},
    {"gtrace:laws", "trace_suite"},
    {"gtau:laws", "tau_suite"},
};

} // namespace

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> registry = build_registry();
    return registry;
}

const SuiteInfo* find_suite(const std::string& name) {
    for (const auto& s : suite_registry())
        if (s.name == name) return &s;
    return nullptr;
}

std::vector<std::string> all_suite_names() {
    std::vector<std::string> names;
    for (const auto& s : suite_registry()) names.push_back(s.name);
    return names;
}

void check_registry_complete() {
    for (const auto& [claim, suite] : kClaimCatalogue)
        if (find_suite(suite) == nullptr)
            throw ValidationError(std::string("claim '") + claim +
                                  "' has no registered suite '" + suite + "'");
}

Scenario parse_scenario(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("scenario: expected a JSON object");
    static const std::vector<std::string> known = {
        "seed", "dims", "trials", "tolerance", "suites", "generatorOverrides",
        "lambdaLaw"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw ParseError("scenario: unknown key '" + it.key() + "'");

    Scenario s;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
            throw ValidationError("scenario: 'seed' must be a nonnegative integer");
        s.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("dims")) {
        const auto& dims = j["dims"];
        if (!dims.is_object()) throw ParseError("scenario: 'dims' must be an object");
        for (auto it = dims.begin(); it != dims.end(); ++it)
            if (it.key() != "d" && it.key() != "d0" && it.key() != "n")
                throw ParseError("scenario: unknown dims key '" + it.key() + "'");
        const auto dim = [&](const char* key, Eigen::Index fallback) {
            if (!dims.contains(key)) return fallback;
            if (!dims[key].is_number_integer() || dims[key].get<long long>() <= 0)
                throw ValidationError(std::string("scenario: dims.") + key +
                                      " must be a positive integer");
            return static_cast<Eigen::Index>(dims[key].get<long long>());
        };
        s.d = dim("d", s.d);
        s.d0 = dim("d0", s.d0);
        s.n = dim("n", s.n);
    }
    if (j.contains("trials")) {
        if (!j["trials"].is_number_integer() || j["trials"].get<long long>() <= 0)
            throw ValidationError("scenario: 'trials' must be a positive integer");
        s.trials = j["trials"].get<int>();
    }
    if (j.contains("tolerance")) {
        if (!j["tolerance"].is_number() || j["tolerance"].get<double>() <= 0.0)
            throw ValidationError("scenario: 'tolerance' must be positive");
        s.tolerance = j["tolerance"].get<double>();
    }
    if (j.contains("suites")) {
        if (!j["suites"].is_array())
            throw ParseError("scenario: 'suites' must be an array");
        for (const auto& name : j["suites"]) {
            if (!name.is_string())
                throw ParseError("scenario: suite names must be strings");
            s.suites.push_back(name.get<std::string>());
        }
    }
    if (j.contains("generatorOverrides")) {
        if (!j["generatorOverrides"].is_object())
            throw ParseError("scenario: 'generatorOverrides' must be an object");
        s.generator_overrides = j["generatorOverrides"];
    }
    if (j.contains("lambdaLaw")) s.lambda_law = tail_law_from_json(j["lambdaLaw"]);

    bool needsOnb = false;
    for (const auto& name : s.suites) {
        const SuiteInfo* info = find_suite(name);
        if (info == nullptr)
            throw ValidationError("scenario: unknown suite '" + name + "'");
        needsOnb = needsOnb || info->needs_onb;
    }
    if (needsOnb && s.d != s.n * s.d0)
        throw ValidationError(
            "scenario: selected suites require dims with d = n * d0");
    return s;
}

Scenario parse_scenario_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("scenario: ") + e.what());
    }
    return parse_scenario(j);
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("scenario: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

nlohmann::json scenario_to_json(const Scenario& s) {
    nlohmann::json j = {{"seed", s.seed},
                        {"dims", {{"d", s.d}, {"d0", s.d0}, {"n", s.n}}},
                        {"trials", s.trials},
                        {"tolerance", s.tolerance},
                        {"suites", s.suites}};
    if (!s.generator_overrides.empty())
        j["generatorOverrides"] = s.generator_overrides;
    if (s.lambda_law.has_value()) j["lambdaLaw"] = tail_law_to_json(*s.lambda_law);
    return j;
}

Scenario default_scenario() {
    Scenario s;
    s.seed = 42;
    s.d = 6;
    s.d0 = 2;
    s.n = 3;
    s.trials = 25;
    s.tolerance = kDefaultTol;
    s.suites = all_suite_names();
    return s;
}

VerificationReport run_scenario(const Scenario& s) {
    check_registry_complete();
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.scenario_echo = scenario_to_json(s);
    for (const auto& name : s.suites) {
        const SuiteInfo* info = find_suite(name);
        if (info == nullptr)
            throw ValidationError("run_scenario: unknown suite '" + name + "'");
        try {
            info->run(s, report.records);
        } catch (const std::exception& e) {
            CheckRecord r;
            r.id = name + "/error";
            r.claim = info->claim;
            r.kind = CheckRecord::Kind::identity;
            r.pass = false;
            r.instance_digest = digest_json({{"error", e.what()}});
            report.records.push_back(std::move(r));
        }
    }
    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) {
                         return a.id < b.id;
                     });
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

namespace {

nlohmann::json record_to_json(const CheckRecord& r) {
    nlohmann::json j = {
        {"id", r.id},
        {"paperRef", r.claim},
        {"instanceDigest", r.instance_digest},
        {"kind", r.kind == CheckRecord::Kind::inequality ? "inequality"
                                                         : "identity"},
        {"lhs", r.lhs},
        {"rhs", r.rhs},
        {"tolerance", r.tolerance},
        {"pass", r.pass}};
    if (r.skipped_reason.has_value()) j["skippedReason"] = *r.skipped_reason;
    return j;
}

double record_slack(const CheckRecord& r) {
    if (r.kind == CheckRecord::Kind::inequality)
        return r.rhs + r.tolerance - r.lhs;
    return r.tolerance - std::abs(r.lhs - r.rhs);
}

} // namespace

std::string emit_report(const VerificationReport& r, ReportFormat format) {
    const ReportSummary s = r.summary();
    if (format == ReportFormat::json) {
        nlohmann::json j = {{"scenario", r.scenario_echo},
                            {"summary",
                             {{"total", s.total},
                              {"passed", s.passed},
                              {"failed", s.failed},
                              {"skipped", s.skipped}}},
                            {"records", nlohmann::json::array()},
                            {"wallTimeSeconds", r.wall_time_seconds}};
        for (const auto& rec : r.records) j["records"].push_back(record_to_json(rec));
        return j.dump(2) + "\n";
    }

    // markdown: one table row per claim, worst slack across its records
    struct Row {
        int total = 0, passed = 0, failed = 0, skipped = 0;
        double worst_slack = std::numeric_limits<double>::infinity();
        std::string worst_id;
    };
    std::map<std::string, Row> rows;
    for (const auto& rec : r.records) {
        Row& row = rows[rec.claim];
        ++row.total;
        if (rec.skipped_reason.has_value()) {
            ++row.skipped;
            continue;
        }
        if (rec.pass)
            ++row.passed;
        else
            ++row.failed;
        const double slack = record_slack(rec);
        if (slack < row.worst_slack) {
            row.worst_slack = slack;
            row.worst_id = rec.id;
        }
    }

    std::ostringstream os;
    os << "# Verification report\n\n";
    os << "Checks: " << s.total << "  passed: " << s.passed
       << "  failed: " << s.failed << "  skipped: " << s.skipped << "\n\n";
    os << "| claim | checks | passed | failed | skipped | worst slack |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& [claim, row] : rows) {
        os << "| " << claim << " | " << row.total << " | " << row.passed << " | "
           << row.failed << " | " << row.skipped << " | ";
        if (std::isfinite(row.worst_slack))
            os << row.worst_slack;
        else
            os << "-";
        os << " |\n";
    }
    bool anyFailed = false;
    for (const auto& rec : r.records)
        if (!rec.skipped_reason.has_value() && !rec.pass) {
            if (!anyFailed) os << "\n## Failures\n\n";
            anyFailed = true;
            os << "- `" << rec.id << "` (" << rec.claim << "): lhs=" << rec.lhs
               << " rhs=" << rec.rhs << " tol=" << rec.tolerance << "\n";
        }
    return os.str();
}

ReportFormat report_format_from_string(const std::string& s) {
    if (s == "json") return ReportFormat::json;
    if (s == "markdown") return ReportFormat::markdown;
    throw ValidationError("unknown report format '" + s + "'");
}

TailLaw parse_law(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("law: expected 'power:<s>' or 'geometric:<r>'");
    const std::string kind = text.substr(0, colon);
    double param = 0.0;
    try {
        param = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw ParseError("law: bad parameter in '" + text + "'");
    }
    if (kind == "power") return TailLaw{TailLaw::Kind::power, param};
    if (kind == "geometric") return TailLaw{TailLaw::Kind::geometric, param};
    throw ParseError("law: unknown kind '" + kind + "'");
}

VerificationReport demo(const std::string& name) {
    Scenario s;
    s.seed = 0xC0FFEE;
    if (name == "canonical") {
        s.d = 4;
        s.d0 = 1;
        s.n = 4;
        s.trials = 10;
        s.suites = {"std_context", "sigma",       "ghs_inner",
                    "trace",       "tau",         "ideal_suite",
                    "inner_suite", "trace_suite", "tau_suite"};
    } else if (name == "sweep") {
        s.d = 4;
        s.d0 = 1;
        s.n = 4;
        s.trials = 5;
        s.suites = {"unbounded_sweep", "tail_compactness", "existence_bound"};
    } else if (name == "ghs") {
        s.d = 4;
        s.d0 = 2;
        s.n = 2;
        s.trials = 10;
        s.suites = {"admissible_subspace", "is_member", "is_member_trace_class",
                    "pframe_lower_constant"};
    } else {
        throw ValidationError("demo: unknown name '" + name +
                              "' (expected canonical, sweep or ghs)");
    }
    return run_scenario(s);
}

} // namespace gmult
