#include "gmult/schatten.hpp"

#include <algorithm>
#include <cmath>

#include "gmult/instances.hpp"
#include "gmult/json_io.hpp"

namespace gmult {

namespace {

double max_abs_entry(const ComplexMatrix& a) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            s = std::max(s, std::abs(a(i, j)));
    return s;
}

ComplexMatrix modulus_root(const ComplexMatrix& a) {
    return sqrt_psd(matrix_abs(a), 1e-6); // |a| is PSD up to rounding
}

} // namespace

GhsContext make_ghs_context(ConjLinearIsometry theta, OpSequence f, VectorSeq x,
                            double tol) {
    validate(f);
    if (theta.matrix.rows() != f.d0 || theta.matrix.cols() != f.d0)
        throw DimMismatch("ghs context: theta must act on H0");
    if ((theta.matrix.adjoint() * theta.matrix -
         ComplexMatrix::Identity(f.d0, f.d0))
            .norm() > scaled_tol(1.0, tol))
        throw ValidationError("ghs context: theta matrix must be unitary");
    if (x.terms() != f.terms())
        throw DimMismatch("ghs context: x must have one vector per basis term");
    for (const auto& v : x.vecs)
        if (v.size() != f.d0) throw DimMismatch("ghs context: x_n must lie in H0");
    if (!classify(f, tol).is_orthonormal_basis)
        throw NotOrthonormalBasis("ghs context: F is not an orthonormal basis");

    GhsContext ctx;
    ctx.theta = std::move(theta);
    ctx.f = std::move(f);
    ctx.x = std::move(x);
    ctx.tol = tol;

    const Eigen::Index n = ctx.terms();
    const Eigen::Index d = ctx.dim();
    ctx.probes.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        ctx.probes.push_back(ctx.f.ops[static_cast<std::size_t>(k)].adjoint() *
                             ctx.x.vecs[static_cast<std::size_t>(k)]);
        ctx.probe_scale = std::max(ctx.probe_scale, ctx.probes.back().norm());
    }

    // theta applied to every basis-block column, reused across brackets
    std::vector<ComplexMatrix> thetaCols(static_cast<std::size_t>(n));
    for (Eigen::Index m = 0; m < n; ++m)
        thetaCols[static_cast<std::size_t>(m)] =
            ctx.theta.matrix *
            ctx.f.ops[static_cast<std::size_t>(m)].conjugate();

    for (Eigen::Index nn = 0; nn < n; ++nn)
        for (Eigen::Index m = 0; m < n; ++m) {
            const ComplexVector& pn = ctx.probes[static_cast<std::size_t>(nn)];
            const ComplexVector& pm = ctx.probes[static_cast<std::size_t>(m)];
            for (Eigen::Index i = 0; i < d; ++i)
                for (Eigen::Index l = 0; l < d; ++l) {
                    const ComplexVector defect =
                        std::conj(pn(i)) *
                            thetaCols[static_cast<std::size_t>(m)].col(l) -
                        pm(l) * ctx.f.ops[static_cast<std::size_t>(nn)].col(i);
                    ctx.bracket_sup = std::max(ctx.bracket_sup, defect.norm());
                }
        }

    if (ctx.bracket_sup <= scaled_tol(ctx.probe_scale, tol)) {
        ctx.admissible_basis.reserve(static_cast<std::size_t>(d * d));
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) {
                ComplexMatrix e = ComplexMatrix::Zero(d, d);
                e(i, j) = 1.0;
                ctx.admissible_basis.push_back(std::move(e));
            }
    }
    return ctx;
}

GhsContext std_context(Eigen::Index d) {
    ComplexVector one(1);
    one(0) = 1.0;
    return make_ghs_context(conjugation_isometry(1), std_onb(d),
                            constant_vector_seq(one, d));
}

GhsContext phase_context(Eigen::Index d, double phase, double amplitude,
                         std::uint64_t seed) {
    ComplexMatrix u0(1, 1);
    u0(0, 0) = std::polar(1.0, phase);
    ComplexVector xi(1);
    xi(0) = std::polar(amplitude, phase / 2.0);
    Rng rng(seed);
    ComplexMatrix w = rng.haar_unitary(d);
    OpSequence f;
    f.d = d;
    f.d0 = 1;
    for (Eigen::Index n = 0; n < d; ++n) f.ops.push_back(w.row(n));
    return make_ghs_context(ConjLinearIsometry{u0}, f,
                            constant_vector_seq(xi, d));
}

MembershipVerdict is_member(const GhsContext& ctx, const ComplexMatrix& a,
                            double tol) {
    if (a.rows() != ctx.dim() || a.cols() != ctx.dim())
        throw DimMismatch("is_member: operator must act on H");
    MembershipVerdict v;
    const double amax = max_abs_entry(a);
    v.residual_cond1 = amax * ctx.bracket_sup;
    v.residual_cond2 = amax * ctx.bracket_sup;
    v.sigma_value = sigma(ctx, a);
    const double eff = scaled_tol(amax * ctx.probe_scale, tol);
    v.is_member = v.residual_cond1 <= eff && v.residual_cond2 <= eff;
    return v;
}

std::pair<double, double> membership_residual(const GhsContext& ctx,
                                              const ComplexMatrix& a,
                                              const ComplexMatrix& u,
                                              const ComplexMatrix& v) {
    double r1 = 0.0, r2 = 0.0;
    const ComplexMatrix aAdj = a.adjoint();
    for (Eigen::Index n = 0; n < ctx.terms(); ++n) {
        const ComplexVector& pn = ctx.probes[static_cast<std::size_t>(n)];
        for (Eigen::Index m = 0; m < ctx.terms(); ++m) {
            const ComplexVector& pm = ctx.probes[static_cast<std::size_t>(m)];
            const auto& fn = ctx.f.ops[static_cast<std::size_t>(n)];
            const auto& fm = ctx.f.ops[static_cast<std::size_t>(m)];
            const ComplexVector lhs1 = ctx.theta.apply(
                fm * (v.adjoint() * (aAdj * (u.adjoint() * pn))));
            const ComplexVector rhs1 = fn * (u * (a * (v * pm)));
            r1 = std::max(r1, (lhs1 - rhs1).norm());
            const ComplexVector lhs2 =
                ctx.theta.apply(fm * (v.adjoint() * (a * (u.adjoint() * pn))));
            const ComplexVector rhs2 = fn * (u * (aAdj * (v * pm)));
            r2 = std::max(r2, (lhs2 - rhs2).norm());
        }
    }
    return {r1, r2};
}

std::vector<ComplexMatrix> admissible_subspace(const GhsContext& ctx) {
    return ctx.admissible_basis;
}

ComplexMatrix random_member(const GhsContext& ctx, Rng& rng) {
    const Eigen::Index d = ctx.dim();
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    if (ctx.admissible_basis.empty()) return a;
    const double scale = 1.0 / static_cast<double>(d);
    for (const auto& e : ctx.admissible_basis)
        a += (rng.complex_gaussian() * scale) * e;
    return a;
}

double sigma(const GhsContext& ctx, const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& p : ctx.probes) s += (a * p).squaredNorm();
    return std::sqrt(s);
}

Complex ghs_inner(const GhsContext& ctx, const ComplexMatrix& a,
                  const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimMismatch("ghs_inner: shape mismatch");
    Complex s(0.0, 0.0);
    for (const auto& p : ctx.probes)
        s += inner(ComplexVector(a * p), ComplexVector(b * p));
    return s;
}

double pframe_lower_constant(const GhsContext& ctx, double p) {
    if (p < 2.0)
        throw PreconditionFailed("pframe_lower_constant: p must be >= 2");
    const Eigen::Index d = ctx.dim();
    if (p == 2.0) {
        ComplexMatrix gram = ComplexMatrix::Zero(d, d);
        for (const auto& pn : ctx.probes) gram += pn * pn.adjoint();
        const double lmin = hermitian_eigenvalues(gram).minCoeff();
        return std::sqrt(std::max(lmin, 0.0));
    }

    // multistart projected descent on f(h) = sum |<h, p_n>|^p over the sphere
    const auto value = [&](const ComplexVector& h) {
        double s = 0.0;
        for (const auto& pn : ctx.probes)
            s += std::pow(std::norm(inner(h, pn)), p / 2.0);
        return s;
    };
    const auto gradient = [&](const ComplexVector& h) {
        ComplexVector g = ComplexVector::Zero(d);
        for (const auto& pn : ctx.probes) {
            const Complex c = inner(h, pn); // p_n^* h
            if (c == Complex(0.0, 0.0)) continue;
            const double w = std::pow(std::norm(c), p / 2.0 - 1.0);
            g += ((p / 2.0) * w * c) * pn;
        }
        return g;
    };

    Rng rng(mix_seed(0x70667261u, static_cast<std::uint64_t>(d) * 131 +
                                      static_cast<std::uint64_t>(p * 64.0)));
    double best = std::numeric_limits<double>::infinity();
    for (int start = 0; start < 8; ++start) {
        ComplexVector h = rng.unit_vector(d);
        double f = value(h);
        double step = 0.5;
        for (int it = 0; it < 300 && step > 1e-12; ++it) {
            ComplexVector cand = h - step * gradient(h);
            const double nrm = cand.norm();
            if (nrm < 1e-14) {
                step *= 0.5;
                continue;
            }
            cand /= nrm;
            const double fc = value(cand);
            if (fc < f) {
                h = cand;
                f = fc;
                step *= 1.2;
            } else {
                step *= 0.5;
            }
        }
        best = std::min(best, f);
    }
    return std::pow(best, 1.0 / p);
}

Complex trace(const GhsContext& ctx, const ComplexMatrix& a) {
    if (a.rows() != ctx.dim() || a.cols() != ctx.dim())
        throw DimMismatch("trace: operator must act on H");
    Complex s(0.0, 0.0);
    for (const auto& p : ctx.probes) s += inner(ComplexVector(a * p), p);
    return s;
}

MembershipVerdict is_member_trace_class(const GhsContext& ctx,
                                        const ComplexMatrix& a, double tol) {
    if (a.rows() != ctx.dim() || a.cols() != ctx.dim())
        throw DimMismatch("is_member_trace_class: operator must act on H");
    MembershipVerdict v = is_member(ctx, modulus_root(a), tol);
    v.sigma_value = sigma(ctx, modulus_root(a));
    return v;
}

double tau(const GhsContext& ctx, const ComplexMatrix& a, double tol) {
    if (!is_member_trace_class(ctx, a, tol).is_member)
        throw NotTraceClass("tau: trace-class certificate failed");
    return trace(ctx, matrix_abs(a)).real();
}

namespace {

struct SuiteDraw {
    ComplexMatrix a, b, c, t;
    Complex alpha;
};

SuiteDraw draw_members(const GhsContext& ctx, Rng& rng) {
    SuiteDraw d;
    d.a = random_member(ctx, rng);
    d.b = random_member(ctx, rng);
    d.c = random_member(ctx, rng);
    d.t = rng.gaussian_matrix(ctx.dim(), ctx.dim());
    d.alpha = rng.complex_gaussian();
    return d;
}

std::optional<double> try_tau(const GhsContext& ctx, const ComplexMatrix& a,
                              double tol) {
    if (!is_member_trace_class(ctx, a, tol).is_member) return std::nullopt;
    return trace(ctx, matrix_abs(a)).real();
}

// Probe-eigenvector construction: A with A p_n = lambda_n p_n. Only
// available when the probes form a basis of H.
std::optional<ComplexMatrix> eigen_construction(const GhsContext& ctx,
                                                const std::vector<Complex>& lambda) {
    if (ctx.terms() != ctx.dim()) return std::nullopt;
    const Eigen::Index d = ctx.dim();
    ComplexMatrix p(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        p.col(i) = ctx.probes[static_cast<std::size_t>(i)];
    Eigen::VectorXd sv = singular_values(p);
    if (sv(sv.size() - 1) <= 1e-9 * (1.0 + sv(0))) return std::nullopt;
    ComplexVector diag(d);
    for (Eigen::Index i = 0; i < d; ++i)
        diag(i) = lambda[static_cast<std::size_t>(i)];
    return ComplexMatrix(p * diag.asDiagonal() * p.inverse());
}

} // namespace

VerificationReport ideal_suite(const GhsContext& ctx, std::uint64_t seed,
                               int trials, double tol) {
    VerificationReport report;
    RecordSink sink(report.records, "ideal_suite", tol);
    const std::string ctxDigest = digest_json(ghs_context_to_json(ctx));
    Rng rng(mix_seed(seed, "ideal_suite"));
    const double aFrame = pframe_lower_constant(ctx, 2.0);

    for (int trial = 0; trial < trials; ++trial) {
        sink.set_trial(trial);
        sink.set_instance_digest(
            digest_json({{"context", ctxDigest}, {"trial", trial}}));
        SuiteDraw d = draw_members(ctx, rng);
        const double sa = sigma(ctx, d.a), sb = sigma(ctx, d.b);

        sink.identity("sigma-homogeneity", "ghs-class:sigma-homogeneity",
                      sigma(ctx, ComplexMatrix(d.alpha * d.a)),
                      std::abs(d.alpha) * sa, std::abs(d.alpha) * sa);
        sink.inequality("sigma-triangle", "ghs-class:sigma-triangle",
                        sigma(ctx, ComplexMatrix(d.a + d.b)), sa + sb, sa + sb);

        // the seminorm laws need no membership; exercise arbitrary operators too
        const ComplexMatrix g = rng.gaussian_matrix(ctx.dim(), ctx.dim());
        const double sg = sigma(ctx, g);
        sink.identity("sigma-homogeneity-any", "ghs-class:sigma-homogeneity",
                      sigma(ctx, ComplexMatrix(d.alpha * g)),
                      std::abs(d.alpha) * sg, std::abs(d.alpha) * sg);
        sink.inequality("sigma-triangle-any", "ghs-class:sigma-triangle",
                        sigma(ctx, ComplexMatrix(g + d.t)), sg + sigma(ctx, d.t),
                        sg + sigma(ctx, d.t));

        MembershipVerdict adj = is_member(ctx, ComplexMatrix(d.a.adjoint()), tol);
        sink.inequality("adjoint-member", "ghs-class:adjoint-closed",
                        adj.residual_cond1, 0.0,
                        max_abs_entry(d.a) * ctx.probe_scale);
        sink.identity("adjoint-sigma", "ghs-class:adjoint-closed",
                      sigma(ctx, ComplexMatrix(d.a.adjoint())), sa, sa);

        const double tn = operator_norm(d.t);
        MembershipVerdict ta = is_member(ctx, ComplexMatrix(d.t * d.a), tol);
        sink.inequality("left-ideal-member", "ghs-class:left-ideal",
                        ta.residual_cond1, 0.0,
                        max_abs_entry(d.a) * tn * ctx.probe_scale);
        sink.inequality("left-ideal-sigma", "ghs-class:left-ideal",
                        sigma(ctx, ComplexMatrix(d.t * d.a)), tn * sa, tn * sa);
        MembershipVerdict at = is_member(ctx, ComplexMatrix(d.a * d.t), tol);
        sink.inequality("right-ideal-member", "ghs-class:right-ideal",
                        at.residual_cond1, 0.0,
                        max_abs_entry(d.a) * tn * ctx.probe_scale);
        sink.inequality("right-ideal-sigma", "ghs-class:right-ideal",
                        sigma(ctx, ComplexMatrix(d.a * d.t)), tn * sa, tn * sa);

        if (aFrame > scaled_tol(ctx.probe_scale, tol))
            sink.inequality("norm-domination", "ghs-class:norm-domination",
                            aFrame * operator_norm(d.a), sa, sa);
        else
            sink.skip("norm-domination", "ghs-class:norm-domination",
                      "probe family has no positive lower 2-frame constant");

        // A^*A <= B^*B by construction: B = (A^*A + C^*C)^{1/2}
        ComplexMatrix bb = sqrt_psd(
            ComplexMatrix(d.a.adjoint() * d.a + d.c.adjoint() * d.c), 1e-6);
        if (is_member(ctx, bb, tol).is_member)
            sink.inequality("psd-order-monotone", "ghs-class:psd-order-monotone",
                            sa, sigma(ctx, bb), sa + sigma(ctx, bb));
        else
            sink.skip("psd-order-monotone", "ghs-class:psd-order-monotone",
                      "constructed dominating operator leaves the class");

        ComplexMatrix absA = matrix_abs(d.a);
        MembershipVerdict modv = is_member(ctx, absA, tol);
        sink.inequality("modulus-member", "ghs-class:modulus-membership",
                        modv.residual_cond1, 0.0,
                        max_abs_entry(d.a) * ctx.probe_scale);
        sink.identity("modulus-sigma", "ghs-class:modulus-membership",
                      sigma(ctx, absA), sa, sa);

        const double anorm = operator_norm(d.a);
        if (anorm > 0.0) {
            ComplexMatrix a0 = d.a * (0.9 / anorm);
            const double s0 = sigma(ctx, a0);
            double worst = 0.0;
            ComplexMatrix pw = a0;
            for (int n = 2; n <= 40; ++n) {
                pw = pw * a0;
                const double dom = std::pow(0.9, n - 1) * s0;
                if (dom > 0.0) worst = std::max(worst, sigma(ctx, pw) / dom);
            }
            sink.inequality("power-decay", "ghs-class:power-decay", worst, 1.0, 1.0);
        } else {
            sink.skip("power-decay", "ghs-class:power-decay", "zero member drawn");
        }

        std::vector<Complex> lam;
        for (Eigen::Index i = 0; i < ctx.dim(); ++i)
            lam.push_back(rng.complex_gaussian());
        if (auto ev = eigen_construction(ctx, lam);
            ev.has_value() && is_member(ctx, *ev, tol).is_member) {
            double expected = 0.0;
            for (Eigen::Index i = 0; i < ctx.dim(); ++i)
                expected += std::norm(lam[static_cast<std::size_t>(i)]) *
                            ctx.x.vecs[static_cast<std::size_t>(i)].squaredNorm();
            const double got = sigma(ctx, *ev);
            sink.identity("eigenvector-sigma", "ghs-class:eigenvector-sigma",
                          got * got, expected, expected);
        } else {
            sink.skip("eigenvector-sigma", "ghs-class:eigenvector-sigma",
                      "probes do not form an admissible eigenbasis");
        }

        // adjoint symmetry outside the class is not asserted, only observed
        if (ctx.admissible_basis.size() ==
            static_cast<std::size_t>(ctx.dim() * ctx.dim())) {
            sink.identity("adjoint-symmetry-scan", "ghs-class:adjoint-closed",
                          sigma(ctx, ComplexMatrix(g.adjoint())), sg, sg);
        } else {
            const double asym = std::abs(sigma(ctx, ComplexMatrix(g.adjoint())) - sg);
            sink.skip("adjoint-symmetry-scan", "ghs-class:adjoint-closed",
                      "non-member scan, observed asymmetry " + std::to_string(asym));
        }
    }
    return report;
}

VerificationReport inner_suite(const GhsContext& ctx, std::uint64_t seed,
                               int trials, double tol) {
    VerificationReport report;
    RecordSink sink(report.records, "inner_suite", tol);
    const std::string ctxDigest = digest_json(ghs_context_to_json(ctx));
    Rng rng(mix_seed(seed, "inner_suite"));
    const double aFrame = pframe_lower_constant(ctx, 2.0);

    for (int trial = 0; trial < trials; ++trial) {
        sink.set_trial(trial);
        sink.set_instance_digest(
            digest_json({{"context", ctxDigest}, {"trial", trial}}));
        SuiteDraw d = draw_members(ctx, rng);
        const double sa = sigma(ctx, d.a), sb = sigma(ctx, d.b);
        const double scale = (1.0 + sa) * (1.0 + sb);

        const Complex aa = ghs_inner(ctx, d.a, d.a);
        sink.inequality("positivity", "ghs-inner:positivity", -aa.real(), 0.0,
                        sa * sa);
        sink.identity("positivity-imag", "ghs-inner:positivity", aa.imag(), 0.0,
                      sa * sa);
        sink.identity("gram-sigma", "ghs-inner:positivity", aa.real(), sa * sa,
                      sa * sa);

        if (aFrame > scaled_tol(ctx.probe_scale, tol))
            sink.inequality("definiteness", "ghs-inner:definiteness",
                            aFrame * operator_norm(d.a), sa, sa);
        else
            sink.skip("definiteness", "ghs-inner:definiteness",
                      "probe family has no positive lower 2-frame constant");

        sink.identity("additive", "ghs-inner:sesquilinear",
                      std::abs(ghs_inner(ctx, ComplexMatrix(d.a + d.b), d.c) -
                               ghs_inner(ctx, d.a, d.c) - ghs_inner(ctx, d.b, d.c)),
                      0.0, scale);
        sink.identity("homogeneous", "ghs-inner:sesquilinear",
                      std::abs(ghs_inner(ctx, ComplexMatrix(d.alpha * d.a), d.b) -
                               d.alpha * ghs_inner(ctx, d.a, d.b)),
                      0.0, std::abs(d.alpha) * scale);
        sink.identity("conjugate-symmetry", "ghs-inner:conjugate-symmetry",
                      std::abs(std::conj(ghs_inner(ctx, d.a, d.b)) -
                               ghs_inner(ctx, d.b, d.a)),
                      0.0, scale);
        sink.identity("adjoint-pair", "ghs-inner:adjoint-pair",
                      std::abs(ghs_inner(ctx, ComplexMatrix(d.a.adjoint()),
                                         ComplexMatrix(d.b.adjoint())) -
                               std::conj(ghs_inner(ctx, d.a, d.b))),
                      0.0, scale);
        sink.identity("left-adjunction", "ghs-inner:shift-adjunction",
                      std::abs(ghs_inner(ctx, ComplexMatrix(d.t * d.a), d.b) -
                               ghs_inner(ctx, d.a, ComplexMatrix(d.t.adjoint() * d.b))),
                      0.0, operator_norm(d.t) * scale);
        sink.identity("right-adjunction", "ghs-inner:shift-adjunction",
                      std::abs(ghs_inner(ctx, ComplexMatrix(d.a * d.t), d.b) -
                               ghs_inner(ctx, d.a, ComplexMatrix(d.b * d.t.adjoint()))),
                      0.0, operator_norm(d.t) * scale);
        sink.inequality("cauchy-schwarz", "ghs-inner:cauchy-schwarz",
                        std::abs(ghs_inner(ctx, d.a, d.b)), sa * sb, sa * sb);

        const double sp = sigma(ctx, ComplexMatrix(d.a + d.b));
        const double sm = sigma(ctx, ComplexMatrix(d.a - d.b));
        const double spi = sigma(ctx, ComplexMatrix(d.a + Complex(0, 1) * d.b));
        const double smi = sigma(ctx, ComplexMatrix(d.a - Complex(0, 1) * d.b));
        sink.identity("polarization", "ghs-inner:polarization",
                      std::abs(4.0 * ghs_inner(ctx, d.a, d.b) -
                               Complex(sp * sp - sm * sm, spi * spi - smi * smi)),
                      0.0, 4.0 * scale);
    }
    return report;
}

VerificationReport trace_suite(const GhsContext& ctx, std::uint64_t seed,
                               int trials, double tol) {
    VerificationReport report;
    RecordSink sink(report.records, "trace_suite", tol);
    const std::string ctxDigest = digest_json(ghs_context_to_json(ctx));
    Rng rng(mix_seed(seed, "trace_suite"));

    for (int trial = 0; trial < trials; ++trial) {
        sink.set_trial(trial);
        sink.set_instance_digest(
            digest_json({{"context", ctxDigest}, {"trial", trial}}));
        SuiteDraw d = draw_members(ctx, rng);
        // trace-class elements arise as products of two members
        const ComplexMatrix a = d.a * d.b;
        const ComplexMatrix b2 = d.b * d.c;
        const double sa = sigma(ctx, d.a) * sigma(ctx, d.b) + 1.0;
        const Complex trA = trace(ctx, a);

        MembershipVerdict adjMem =
            is_member_trace_class(ctx, ComplexMatrix(a.adjoint()), tol);
        sink.inequality("adjoint-member", "gtrace:adjoint", adjMem.residual_cond1,
                        0.0, max_abs_entry(a) * ctx.probe_scale);
        sink.identity("adjoint-trace", "gtrace:adjoint",
                      std::abs(trace(ctx, ComplexMatrix(a.adjoint())) -
                               std::conj(trA)),
                      0.0, sa);
        sink.identity("scalar", "gtrace:scalar",
                      std::abs(trace(ctx, ComplexMatrix(d.alpha * a)) -
                               d.alpha * trA),
                      0.0, std::abs(d.alpha) * sa);

        MembershipVerdict lmem = is_member_trace_class(ctx, ComplexMatrix(d.t * a), tol);
        MembershipVerdict rmem = is_member_trace_class(ctx, ComplexMatrix(a * d.t), tol);
        sink.inequality("left-ideal", "gtrace:ideal", lmem.residual_cond1, 0.0,
                        max_abs_entry(a) * operator_norm(d.t) * ctx.probe_scale);
        sink.inequality("right-ideal", "gtrace:ideal", rmem.residual_cond1, 0.0,
                        max_abs_entry(a) * operator_norm(d.t) * ctx.probe_scale);

        const double sA = sigma(ctx, d.a);
        sink.identity("gram-left", "gtrace:gram-identity",
                      std::abs(trace(ctx, ComplexMatrix(d.a.adjoint() * d.a)) -
                               Complex(sA * sA, 0.0)),
                      0.0, sA * sA);
        sink.identity("gram-right", "gtrace:gram-identity",
                      std::abs(trace(ctx, ComplexMatrix(d.a * d.a.adjoint())) -
                               Complex(sA * sA, 0.0)),
                      0.0, sA * sA);

        if (is_member_trace_class(ctx, ComplexMatrix(a + b2), tol).is_member)
            sink.identity("additivity", "gtrace:additivity",
                          std::abs(trace(ctx, ComplexMatrix(a + b2)) - trA -
                                   trace(ctx, b2)),
                          0.0, sa);
        else
            sink.skip("additivity", "gtrace:additivity",
                      "sum fails the trace-class certificate");

        sink.identity("inner-identity", "gtrace:inner-identity",
                      std::abs(trace(ctx, ComplexMatrix(d.b.adjoint() * d.a)) -
                               ghs_inner(ctx, d.a, d.b)),
                      0.0, sa);
        const double csLhs =
            std::abs(trace(ctx, ComplexMatrix(d.b.adjoint() * d.a)));
        const double csRhs =
            std::sqrt(std::max(
                trace(ctx, ComplexMatrix(d.a.adjoint() * d.a)).real(), 0.0)) *
            std::sqrt(std::max(
                trace(ctx, ComplexMatrix(d.b.adjoint() * d.b)).real(), 0.0));
        sink.inequality("cauchy-schwarz", "gtrace:cauchy-schwarz", csLhs, csRhs,
                        csRhs);
        sink.inequality("square-bound", "gtrace:square-bound",
                        std::abs(trace(ctx, ComplexMatrix(d.a * d.a))),
                        trace(ctx, ComplexMatrix(d.a.adjoint() * d.a)).real(),
                        sA * sA);

        const ComplexMatrix psdA = d.a.adjoint() * d.a;
        const ComplexMatrix psdB = psdA + d.c.adjoint() * d.c;
        sink.inequality("monotone", "gtrace:monotone", trace(ctx, psdA).real(),
                        trace(ctx, psdB).real(), trace(ctx, psdB).real());

        std::vector<Complex> lam;
        for (Eigen::Index i = 0; i < ctx.dim(); ++i)
            lam.push_back(rng.complex_gaussian());
        if (auto ev = eigen_construction(ctx, lam);
            ev.has_value() && is_member(ctx, *ev, tol).is_member) {
            Complex expected(0.0, 0.0);
            double escale = 0.0;
            for (Eigen::Index i = 0; i < ctx.dim(); ++i) {
                const double xn =
                    ctx.x.vecs[static_cast<std::size_t>(i)].squaredNorm();
                expected += lam[static_cast<std::size_t>(i)] * xn;
                escale += std::abs(lam[static_cast<std::size_t>(i)]) * xn;
            }
            sink.identity("eigenvector-trace", "gtrace:eigenvector-trace",
                          std::abs(trace(ctx, *ev) - expected), 0.0, escale);

            // PSD variant with ||x_n|| >= 1 gives sigma <= trace
            bool unitProbes = true;
            for (const auto& xv : ctx.x.vecs)
                unitProbes = unitProbes && xv.norm() >= 1.0 - 1e-12;
            std::vector<Complex> lamPos;
            for (const auto& l : lam) lamPos.emplace_back(std::abs(l), 0.0);
            auto evPos = eigen_construction(ctx, lamPos);
            if (unitProbes && evPos.has_value() &&
                is_member(ctx, *evPos, tol).is_member)
                sink.inequality("psd-sigma-trace", "gtrace:psd-sigma-trace",
                                sigma(ctx, *evPos),
                                trace(ctx, *evPos).real(),
                                trace(ctx, *evPos).real());
            else
                sink.skip("psd-sigma-trace", "gtrace:psd-sigma-trace",
                          "needs probe eigenbasis with ||x_n|| >= 1");
        } else {
            sink.skip("eigenvector-trace", "gtrace:eigenvector-trace",
                      "probes do not form an admissible eigenbasis");
            sink.skip("psd-sigma-trace", "gtrace:psd-sigma-trace",
                      "probes do not form an admissible eigenbasis");
        }

        sink.identity("cyclicity", "gtrace:cyclicity",
                      std::abs(trace(ctx, ComplexMatrix(d.t * a)) -
                               trace(ctx, ComplexMatrix(a * d.t))),
                      0.0, operator_norm(d.t) * sa);

        if (is_member_trace_class(ctx, a, tol).is_member) {
            const double tauA = tau(ctx, a, tol);
            sink.inequality("modulus-pairing-bound", "gtrace:modulus-pairing-bound",
                            std::abs(trace(ctx, ComplexMatrix(d.t * matrix_abs(a)))),
                            operator_norm(d.t) * tauA,
                            operator_norm(d.t) * (1.0 + tauA));
            const double rootSigma = sigma(ctx, modulus_root(a));
            sink.identity("root-sigma-tau", "gtrace:root-sigma-tau",
                          rootSigma * rootSigma, tauA, tauA);
            sink.identity("tau-of-modulus", "gtrace:tau-of-modulus",
                          tau(ctx, matrix_abs(a), tol), tauA, tauA);
        } else {
            sink.skip("modulus-pairing-bound", "gtrace:modulus-pairing-bound",
                      "trace-class certificate failed");
            sink.skip("root-sigma-tau", "gtrace:root-sigma-tau",
                      "trace-class certificate failed");
            sink.skip("tau-of-modulus", "gtrace:tau-of-modulus",
                      "trace-class certificate failed");
        }
    }
    return report;
}

VerificationReport tau_suite(const GhsContext& ctx, std::uint64_t seed,
                             int trials, double tol) {
    VerificationReport report;
    RecordSink sink(report.records, "tau_suite", tol);
    const std::string ctxDigest = digest_json(ghs_context_to_json(ctx));
    Rng rng(mix_seed(seed, "tau_suite"));
    const double aFrame = pframe_lower_constant(ctx, 2.0);

    for (int trial = 0; trial < trials; ++trial) {
        sink.set_trial(trial);
        sink.set_instance_digest(
            digest_json({{"context", ctxDigest}, {"trial", trial}}));
        SuiteDraw d = draw_members(ctx, rng);
        const ComplexMatrix a = d.a * d.b;
        const ComplexMatrix b = d.b * d.c;
        if (!is_member_trace_class(ctx, a, tol).is_member ||
            !is_member_trace_class(ctx, b, tol).is_member) {
            sink.skip("tau-suite-trial", "gtau:nonnegative",
                      "drawn products fail the trace-class certificate");
            continue;
        }
        const double tauA = tau(ctx, a, tol);
        const double tauB = tau(ctx, b, tol);

        if (auto t = try_tau(ctx, ComplexMatrix(a.adjoint()), tol); t.has_value())
            sink.identity("adjoint-invariant", "gtau:adjoint-invariant", *t, tauA,
                          tauA);
        else
            sink.skip("adjoint-invariant", "gtau:adjoint-invariant",
                      "adjoint fails the trace-class certificate");
        if (auto t = try_tau(ctx, ComplexMatrix(d.alpha * a), tol); t.has_value())
            sink.identity("absolute-homogeneity", "gtau:absolute-homogeneity", *t,
                          std::abs(d.alpha) * tauA, std::abs(d.alpha) * tauA);
        else
            sink.skip("absolute-homogeneity", "gtau:absolute-homogeneity",
                      "scaled operator fails the trace-class certificate");
        if (auto t = try_tau(ctx, ComplexMatrix(a + b), tol); t.has_value())
            sink.inequality("triangle", "gtau:triangle", *t, tauA + tauB,
                            tauA + tauB);
        else
            sink.skip("triangle", "gtau:triangle",
                      "sum fails the trace-class certificate");
        sink.inequality("nonnegative", "gtau:nonnegative", -tauA, 0.0, tauA);

        if (aFrame > scaled_tol(ctx.probe_scale, tol))
            sink.inequality("definiteness", "gtau:definiteness",
                            aFrame * aFrame * operator_norm(a), tauA, 1.0 + tauA);
        else
            sink.skip("definiteness", "gtau:definiteness",
                      "probe family has no positive lower 2-frame constant");

        const double tn = operator_norm(d.t);
        if (auto t = try_tau(ctx, ComplexMatrix(d.t * a), tol); t.has_value())
            sink.inequality("left-ideal-bound", "gtau:ideal-bound", *t, tn * tauA,
                            tn * (1.0 + tauA));
        else
            sink.skip("left-ideal-bound", "gtau:ideal-bound",
                      "product fails the trace-class certificate");
        if (auto t = try_tau(ctx, ComplexMatrix(a * d.t), tol); t.has_value())
            sink.inequality("right-ideal-bound", "gtau:ideal-bound", *t, tn * tauA,
                            tn * (1.0 + tauA));
        else
            sink.skip("right-ideal-bound", "gtau:ideal-bound",
                      "product fails the trace-class certificate");
        sink.inequality("dominates-trace", "gtau:dominates-trace",
                        std::abs(trace(ctx, a)), tauA, tauA);

        const double sA2 = sigma(ctx, a) * sigma(ctx, a);
        if (auto t = try_tau(ctx, ComplexMatrix(a.adjoint() * a), tol);
            t.has_value())
            sink.inequality("dominates-sigma-squared",
                            "gtau:dominates-sigma-squared", sA2, *t, 1.0 + sA2);
        else
            sink.skip("dominates-sigma-squared", "gtau:dominates-sigma-squared",
                      "gram operator fails the trace-class certificate");

        // [A] <= B' by construction with B' = [A] + E^*E
        const ComplexMatrix grow = matrix_abs(a) + d.c.adjoint() * d.c;
        if (auto t = try_tau(ctx, grow, tol); t.has_value())
            sink.inequality("modulus-monotone", "gtau:modulus-monotone", tauA, *t,
                            1.0 + tauA);
        else
            sink.skip("modulus-monotone", "gtau:modulus-monotone",
                      "grown operator fails the trace-class certificate");

        const double anorm = operator_norm(a);
        if (anorm > 0.0) {
            const ComplexMatrix a0 = a * (0.9 / anorm);
            const double tau0 = try_tau(ctx, a0, tol).value_or(0.0);
            double worst = 0.0;
            bool decayOk = tau0 > 0.0;
            ComplexMatrix pw = a0;
            for (int n = 2; decayOk && n <= 40; ++n) {
                pw = pw * a0;
                const auto tn_ = try_tau(ctx, pw, tol);
                if (!tn_.has_value()) {
                    decayOk = false;
                    break;
                }
                const double dom = std::pow(0.9, n - 1) * tau0;
                if (dom > 0.0) worst = std::max(worst, *tn_ / dom);
            }
            if (decayOk)
                sink.inequality("power-decay", "gtau:power-decay", worst, 1.0, 1.0);
            else
                sink.skip("power-decay", "gtau:power-decay",
                          "powers fail the trace-class certificate");
        } else {
            sink.skip("power-decay", "gtau:power-decay", "zero product drawn");
        }

        // pairing against a second orthonormal basis G_n = F_n U0
        const ComplexMatrix u0 = rng.haar_unitary(ctx.dim());
        Complex pairing(0.0, 0.0);
        for (Eigen::Index n = 0; n < ctx.terms(); ++n) {
            const ComplexVector gn =
                u0.adjoint() * ctx.probes[static_cast<std::size_t>(n)];
            pairing += inner(
                ComplexVector(a * ctx.probes[static_cast<std::size_t>(n)]), gn);
        }
        sink.inequality("second-basis-pairing", "gtau:second-basis-pairing",
                        std::abs(pairing), tauA, 1.0 + tauA);
    }
    return report;
}

} // namespace gmult
