#include "gmult/multiplier.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "gmult/rng.hpp"

namespace gmult {

namespace {

double accumulate_sup(const std::vector<Complex>& values, Eigen::Index from) {
    double s = 0.0;
    for (Eigen::Index i = from; i < static_cast<Eigen::Index>(values.size()); ++i)
        s = std::max(s, std::abs(values[static_cast<std::size_t>(i)]));
    return s;
}

bool same_matrix(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).norm() == 0.0;
}

bool same_sequence(const OpSequence& a, const OpSequence& b) {
    if (a.d != b.d || a.d0 != b.d0 || a.ops.size() != b.ops.size()) return false;
    for (std::size_t i = 0; i < a.ops.size(); ++i)
        if (!same_matrix(a.ops[i], b.ops[i])) return false;
    return true;
}

bool same_vectors(const VectorSeq& a, const VectorSeq& b) {
    if (a.vecs.size() != b.vecs.size()) return false;
    for (std::size_t i = 0; i < a.vecs.size(); ++i)
        if (a.vecs[i].size() != b.vecs[i].size() ||
            (a.vecs[i] - b.vecs[i]).norm() != 0.0)
            return false;
    return true;
}

// Max |<u_k, v_n>| over k != n; throws when above the biorthogonality
// tolerance 1e-10 * (1 + pairing scale).
void require_biorthogonal(const std::vector<ComplexVector>& u,
                          const std::vector<ComplexVector>& v,
                          const char* where) {
    double scale = 0.0;
    for (const auto& un : u) scale = std::max(scale, un.norm());
    double vscale = 0.0;
    for (const auto& vn : v) vscale = std::max(vscale, vn.norm());
    scale *= vscale;
    double worst = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k)
        for (std::size_t n = 0; n < v.size(); ++n)
            if (k != n) worst = std::max(worst, std::abs(inner(u[k], v[n])));
    if (worst > 1e-10 * (1.0 + scale)) {
        std::ostringstream os;
        os << where << ": off-diagonal pairing " << worst
           << " exceeds tolerance " << 1e-10 * (1.0 + scale);
        throw BiorthogonalityViolated(os.str());
    }
}

std::vector<ComplexMatrix> expect_map_list(const ComposeArg& arg, Eigen::Index d0,
                                           Eigen::Index n) {
    const auto* list = std::get_if<std::vector<ComplexMatrix>>(&arg);
    if (!list) throw DimMismatch("compose_maps: site expects a list {T_n} on H0");
    if (static_cast<Eigen::Index>(list->size()) != n)
        throw DimMismatch("compose_maps: {T_n} length mismatch");
    for (const auto& t : *list)
        if (t.rows() != d0 || t.cols() != d0)
            throw DimMismatch("compose_maps: T_n must act on H0");
    return *list;
}

ComplexMatrix expect_single_map(const ComposeArg& arg, Eigen::Index d) {
    const auto* s = std::get_if<ComplexMatrix>(&arg);
    if (!s) throw DimMismatch("compose_maps: site expects a single operator on H");
    if (s->rows() != d || s->cols() != d)
        throw DimMismatch("compose_maps: S must act on H");
    return *s;
}

} // namespace

double WeightSeq::sup_norm() const { return sup_beyond(0); }

double WeightSeq::sup_beyond(Eigen::Index m) const {
    double s = accumulate_sup(values, std::max<Eigen::Index>(m, 0));
    const std::uint64_t from =
        std::max<std::uint64_t>(static_cast<std::uint64_t>(std::max<Eigen::Index>(m, 0)),
                                static_cast<std::uint64_t>(values.size()));
    return std::max(s, tail.sup_beyond(from));
}

double WeightSeq::l1_norm() const {
    double s = 0.0;
    for (const auto& v : values) s += std::abs(v);
    return s + tail.l1_beyond(static_cast<std::uint64_t>(values.size()));
}

double WeightSeq::l2_norm() const {
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    const double t = tail.l2_beyond(static_cast<std::uint64_t>(values.size()));
    return std::sqrt(s + t * t);
}

WeightSeq conj(const WeightSeq& w) {
    WeightSeq out = w;
    for (auto& v : out.values) v = std::conj(v);
    return out;
}

double sup_pair_norm(const VectorSeq& x, const VectorSeq& y) {
    if (x.vecs.size() != y.vecs.size())
        throw DimMismatch("sup_pair_norm: sequence length mismatch");
    double s = 0.0;
    for (std::size_t n = 0; n < x.vecs.size(); ++n)
        s = std::max(s, x.vecs[n].norm() * y.vecs[n].norm());
    return s;
}

MultiplierSpec make_multiplier_spec(WeightSeq lambda, OpSequence a, OpSequence b,
                                    VectorSeq x, VectorSeq y) {
    validate(a);
    validate(b);
    const Eigen::Index n = lambda.terms();
    if (a.terms() != n || b.terms() != n || x.terms() != n || y.terms() != n)
        throw DimMismatch("multiplier spec: all sequences must share the term count");
    if (a.d != b.d || a.d0 != b.d0)
        throw DimMismatch("multiplier spec: A and B must act between the same spaces");
    for (const auto& v : x.vecs)
        if (v.size() != a.d0) throw DimMismatch("multiplier spec: x_n must lie in H0");
    for (const auto& v : y.vecs)
        if (v.size() != a.d0) throw DimMismatch("multiplier spec: y_n must lie in H0");

    MultiplierSpec s;
    s.lambda = std::move(lambda);
    s.a = std::move(a);
    s.b = std::move(b);
    s.x = std::move(x);
    s.y = std::move(y);
    s.bessel_a = optimal_bessel_bound(s.a);
    s.bessel_b = optimal_bessel_bound(s.b);
    s.sup_pair = sup_pair_norm(s.x, s.y);
    return s;
}

std::vector<ComplexVector> carrier_vectors(const OpSequence& seq,
                                           const VectorSeq& v) {
    if (seq.terms() != v.terms())
        throw DimMismatch("carrier_vectors: term count mismatch");
    std::vector<ComplexVector> out;
    out.reserve(v.vecs.size());
    for (std::size_t n = 0; n < v.vecs.size(); ++n)
        out.push_back(seq.ops[n].adjoint() * v.vecs[n]);
    return out;
}

ComplexMatrix assemble(const MultiplierSpec& spec) {
    return assemble_partial(spec, spec.terms());
}

ComplexMatrix assemble_partial(const MultiplierSpec& spec, Eigen::Index m) {
    if (m < 0 || m > spec.terms())
        throw PreconditionFailed("assemble_partial: m out of range");
    ComplexMatrix out = ComplexMatrix::Zero(spec.dim(), spec.dim());
    for (Eigen::Index n = 0; n < m; ++n) {
        const auto k = static_cast<std::size_t>(n);
        out += spec.lambda.values[k] *
               rank_one(ComplexVector(spec.a.ops[k].adjoint() * spec.x.vecs[k]),
                        ComplexVector(spec.b.ops[k].adjoint() * spec.y.vecs[k]));
    }
    return out;
}

double existence_bound(const MultiplierSpec& spec) {
    return std::sqrt(spec.bessel_a * spec.bessel_b) * spec.lambda.sup_norm() *
           spec.sup_pair;
}

MultiplierSpec multiplier_adjoint(const MultiplierSpec& spec) {
    return make_multiplier_spec(conj(spec.lambda), spec.b, spec.a, spec.y, spec.x);
}

std::pair<WeightSeq, std::optional<WeightSeq>>
mmstar_reduction(const MultiplierSpec& spec) {
    if (!classify(spec.a).is_orthonormal_sequence)
        throw PreconditionFailed("mmstar_reduction: A must be an orthonormal sequence");
    if (!classify(spec.b).is_orthogonal)
        throw PreconditionFailed("mmstar_reduction: B must be orthogonal");

    WeightSeq mu;
    mu.values.reserve(spec.x.vecs.size());
    bool sqrtDefined = true;
    WeightSeq root;
    for (Eigen::Index n = 0; n < spec.terms(); ++n) {
        const auto k = static_cast<std::size_t>(n);
        const double w = (spec.b.ops[k].adjoint() * spec.y.vecs[k]).norm();
        const double l = std::abs(spec.lambda.values[k]);
        mu.values.emplace_back(l * l * w * w, 0.0);
        const double xn = spec.x.vecs[k].norm();
        if (xn == 0.0)
            sqrtDefined = false;
        else
            root.values.emplace_back(l * w / xn, 0.0);
    }
    if (sqrtDefined) return {mu, root};
    return {mu, std::nullopt};
}

std::pair<WeightSeq, std::optional<WeightSeq>>
mstarm_reduction(const MultiplierSpec& spec) {
    if (!classify(spec.a).is_orthogonal)
        throw PreconditionFailed("mstarm_reduction: A must be orthogonal");
    if (!classify(spec.b).is_orthonormal_sequence)
        throw PreconditionFailed("mstarm_reduction: B must be an orthonormal sequence");

    WeightSeq gamma;
    bool sqrtDefined = true;
    WeightSeq root;
    for (Eigen::Index n = 0; n < spec.terms(); ++n) {
        const auto k = static_cast<std::size_t>(n);
        const double w = (spec.a.ops[k].adjoint() * spec.x.vecs[k]).norm();
        const double l = std::abs(spec.lambda.values[k]);
        gamma.values.emplace_back(l * l * w * w, 0.0);
        const double yn = spec.y.vecs[k].norm();
        if (yn == 0.0)
            sqrtDefined = false;
        else
            root.values.emplace_back(l * w / yn, 0.0);
    }
    if (sqrtDefined) return {gamma, root};
    return {gamma, std::nullopt};
}

ComplexMatrix power_formula(const MultiplierSpec& spec, int k) {
    if (k < 1) throw PreconditionFailed("power_formula: k must be positive");
    const auto u = carrier_vectors(spec.a, spec.x);
    const auto v = carrier_vectors(spec.b, spec.y);
    require_biorthogonal(u, v, "power_formula");

    ComplexMatrix out = ComplexMatrix::Zero(spec.dim(), spec.dim());
    for (std::size_t n = 0; n < u.size(); ++n) {
        const Complex pairing = inner(u[n], v[n]);
        out += std::pow(spec.lambda.values[n], k) *
               std::pow(pairing, k - 1) * rank_one(u[n], v[n]);
    }
    return out;
}

MultiplierSpec symbolic_product(const MultiplierSpec& s1, const MultiplierSpec& s2) {
    if (!same_sequence(s1.a, s2.a) || !same_sequence(s1.b, s2.b) ||
        !same_vectors(s1.x, s2.x) || !same_vectors(s1.y, s2.y))
        throw SharedDataMismatch("symbolic_product: specs must share (A, B, x, y)");
    const auto u = carrier_vectors(s1.a, s1.x);
    const auto v = carrier_vectors(s1.b, s1.y);
    require_biorthogonal(u, v, "symbolic_product");

    WeightSeq nu;
    nu.values.reserve(u.size());
    for (std::size_t n = 0; n < u.size(); ++n)
        nu.values.push_back(s1.lambda.values[n] * s2.lambda.values[n] *
                            inner(u[n], v[n]));
    return make_multiplier_spec(nu, s1.a, s1.b, s1.x, s1.y);
}

MultiplierSpec compose_site_lhs(const MultiplierSpec& spec, ComposeSite site,
                                const ComposeArg& arg) {
    const Eigen::Index n = spec.terms();
    switch (site) {
        case ComposeSite::tb: {
            const auto t = expect_map_list(arg, spec.a.d0, n);
            OpSequence b = spec.b;
            for (Eigen::Index i = 0; i < n; ++i)
                b.ops[static_cast<std::size_t>(i)] =
                    t[static_cast<std::size_t>(i)] * b.ops[static_cast<std::size_t>(i)];
            return make_multiplier_spec(spec.lambda, spec.a, b, spec.x, spec.y);
        }
        case ComposeSite::bs: {
            const ComplexMatrix s = expect_single_map(arg, spec.dim());
            OpSequence b = spec.b;
            for (auto& op : b.ops) op = op * s;
            return make_multiplier_spec(spec.lambda, spec.a, b, spec.x, spec.y);
        }
        case ComposeSite::ta: {
            const auto t = expect_map_list(arg, spec.a.d0, n);
            OpSequence a = spec.a;
            for (Eigen::Index i = 0; i < n; ++i)
                a.ops[static_cast<std::size_t>(i)] =
                    t[static_cast<std::size_t>(i)] * a.ops[static_cast<std::size_t>(i)];
            return make_multiplier_spec(spec.lambda, a, spec.b, spec.x, spec.y);
        }
        case ComposeSite::as_site: {
            const ComplexMatrix s = expect_single_map(arg, spec.dim());
            OpSequence a = spec.a;
            for (auto& op : a.ops) op = op * s;
            return make_multiplier_spec(spec.lambda, a, spec.b, spec.x, spec.y);
        }
        case ComposeSite::ty: {
            const auto t = expect_map_list(arg, spec.a.d0, n);
            VectorSeq y = spec.y;
            for (Eigen::Index i = 0; i < n; ++i)
                y.vecs[static_cast<std::size_t>(i)] =
                    t[static_cast<std::size_t>(i)] * y.vecs[static_cast<std::size_t>(i)];
            return make_multiplier_spec(spec.lambda, spec.a, spec.b, spec.x, y);
        }
        case ComposeSite::tx: {
            const auto t = expect_map_list(arg, spec.a.d0, n);
            VectorSeq x = spec.x;
            for (Eigen::Index i = 0; i < n; ++i)
                x.vecs[static_cast<std::size_t>(i)] =
                    t[static_cast<std::size_t>(i)] * x.vecs[static_cast<std::size_t>(i)];
            return make_multiplier_spec(spec.lambda, spec.a, spec.b, x, spec.y);
        }
    }
    throw PreconditionFailed("compose_site_lhs: unknown site");
}

ComposedMultiplier compose_maps(const MultiplierSpec& spec, ComposeSite site,
                                const ComposeArg& arg) {
    const Eigen::Index n = spec.terms();
    const ComplexMatrix id = ComplexMatrix::Identity(spec.dim(), spec.dim());
    switch (site) {
        case ComposeSite::tb: {
            const auto t = expect_map_list(arg, spec.a.d0, n);
            VectorSeq y = spec.y;
            for (Eigen::Index i = 0; i < n; ++i)
                y.vecs[static_cast<std::size_t>(i)] =
                    t[static_cast<std::size_t>(i)].adjoint() *
                    y.vecs[static_cast<std::size_t>(i)];
            return {make_multiplier_spec(spec.lambda, spec.a, spec.b, spec.x, y),
                    id, id};
        }
        case ComposeSite::bs: {
            const ComplexMatrix s = expect_single_map(arg, spec.dim());
            return {spec, id, s};
        }
        case ComposeSite::ta: {
            const auto t = expect_map_list(arg, spec.a.d0, n);
            VectorSeq x = spec.x;
            for (Eigen::Index i = 0; i < n; ++i)
                x.vecs[static_cast<std::size_t>(i)] =
                    t[static_cast<std::size_t>(i)].adjoint() *
                    x.vecs[static_cast<std::size_t>(i)];
            return {make_multiplier_spec(spec.lambda, spec.a, spec.b, x, spec.y),
                    id, id};
        }
        case ComposeSite::as_site: {
            const ComplexMatrix s = expect_single_map(arg, spec.dim());
            return {spec, ComplexMatrix(s.adjoint()), id};
        }
        case ComposeSite::ty: {
            const auto t = expect_map_list(arg, spec.a.d0, n);
            OpSequence b = spec.b;
            for (Eigen::Index i = 0; i < n; ++i)
                b.ops[static_cast<std::size_t>(i)] =
                    t[static_cast<std::size_t>(i)].adjoint() *
                    b.ops[static_cast<std::size_t>(i)];
            return {make_multiplier_spec(spec.lambda, spec.a, b, spec.x, spec.y),
                    id, id};
        }
        case ComposeSite::tx: {
            const auto t = expect_map_list(arg, spec.a.d0, n);
            OpSequence a = spec.a;
            for (Eigen::Index i = 0; i < n; ++i)
                a.ops[static_cast<std::size_t>(i)] =
                    t[static_cast<std::size_t>(i)].adjoint() *
                    a.ops[static_cast<std::size_t>(i)];
            return {make_multiplier_spec(spec.lambda, a, spec.b, spec.x, spec.y),
                    id, id};
        }
    }
    throw PreconditionFailed("compose_maps: unknown site");
}

ComplexMatrix product_general(const MultiplierSpec& s1, const MultiplierSpec& s2) {
    if (s1.dim() != s2.dim() || s1.terms() != s2.terms())
        throw DimMismatch("product_general: specs must act on the same space");
    const auto u = carrier_vectors(s1.a, s1.x);  // A_n^* x_n
    const auto by = carrier_vectors(s1.b, s1.y); // B_n^* y_n
    const auto cz = carrier_vectors(s2.a, s2.x); // C_k^* z_k
    const auto dv = carrier_vectors(s2.b, s2.y); // D_n^* v_n
    require_biorthogonal(cz, by, "product_general");

    ComplexMatrix out = ComplexMatrix::Zero(s1.dim(), s1.dim());
    for (std::size_t n = 0; n < u.size(); ++n)
        out += s1.lambda.values[n] * s2.lambda.values[n] * inner(cz[n], by[n]) *
               rank_one(u[n], dv[n]);
    return out;
}

std::pair<double, double> norm_product_bound(const MultiplierSpec& spec_lambda_mu,
                                             const MultiplierSpec& spec_lambda,
                                             const MultiplierSpec& spec_mu) {
    const auto shares = [&](const MultiplierSpec& s) {
        return same_sequence(spec_lambda_mu.a, s.a) &&
               same_sequence(spec_lambda_mu.b, s.b) &&
               same_vectors(spec_lambda_mu.x, s.x) &&
               same_vectors(spec_lambda_mu.y, s.y);
    };
    if (!shares(spec_lambda) || !shares(spec_mu))
        throw SharedDataMismatch("norm_product_bound: specs must share (A, B, x, y)");
    if (!classify(spec_lambda_mu.a).is_orthogonal)
        throw PreconditionFailed("norm_product_bound: A must be orthogonal");
    for (Eigen::Index n = 0; n < spec_lambda_mu.terms(); ++n) {
        const auto k = static_cast<std::size_t>(n);
        const Complex prod = spec_lambda.lambda.values[k] * spec_mu.lambda.values[k];
        if (std::abs(spec_lambda_mu.lambda.values[k] - prod) >
            1e-12 * (1.0 + std::abs(prod)))
            throw PreconditionFailed(
                "norm_product_bound: first weights must be the termwise products");
    }
    const double lhs = operator_norm(assemble(spec_lambda_mu));
    const double viaMu =
        spec_lambda.lambda.sup_norm() * operator_norm(assemble(spec_mu));
    const double viaLambda =
        spec_mu.lambda.sup_norm() * operator_norm(assemble(spec_lambda));
    return {lhs, std::min(viaMu, viaLambda)};
}

std::pair<double, double> tail_compactness(const MultiplierSpec& spec,
                                           Eigen::Index m) {
    if (m < 0 || m > spec.terms())
        throw PreconditionFailed("tail_compactness: m out of range");
    const double lhs =
        operator_norm(ComplexMatrix(assemble(spec) - assemble_partial(spec, m)));
    const double rhs = std::sqrt(spec.bessel_a * spec.bessel_b) * spec.sup_pair *
                       spec.lambda.sup_beyond(m);
    return {lhs, rhs};
}

std::pair<double, double> nuclear_bound(const MultiplierSpec& spec) {
    if (spec.lambda.tag != WeightSeq::ClassTag::l1)
        throw PreconditionFailed("nuclear_bound: weights must declare class l1");
    const double lhs = trace_norm(assemble(spec));
    const double rhs = std::sqrt(spec.bessel_a * spec.bessel_b) * spec.sup_pair *
                       spec.lambda.l1_norm();
    return {lhs, rhs};
}

std::pair<double, double> hs_bound(const MultiplierSpec& spec) {
    if (spec.lambda.tag != WeightSeq::ClassTag::l2)
        throw PreconditionFailed("hs_bound: weights must declare class l2");
    if (!classify(spec.a).is_orthogonal)
        throw PreconditionFailed("hs_bound: A must be orthogonal");
    const double lhs = frobenius_norm(assemble(spec));
    const double rhs = std::sqrt(spec.bessel_a * spec.bessel_b) * spec.sup_pair *
                       spec.lambda.l2_norm();
    return {lhs, rhs};
}

double hs_identity_value(const MultiplierSpec& spec) {
    const auto u = carrier_vectors(spec.a, spec.x);
    const auto v = carrier_vectors(spec.b, spec.y);
    double s = 0.0;
    for (std::size_t n = 0; n < u.size(); ++n)
        s += std::norm(spec.lambda.values[n]) * u[n].squaredNorm() *
             v[n].squaredNorm();
    return std::sqrt(s);
}

std::vector<std::pair<double, double>>
convergence_study(const MultiplierSpec& spec, const std::vector<WeightSeq>& family,
                  ConvergenceMode mode) {
    if (mode == ConvergenceMode::hs && !classify(spec.a).is_orthogonal)
        throw PreconditionFailed("convergence_study: hs mode needs A orthogonal");
    const ComplexMatrix base = assemble(spec);
    const double c = std::sqrt(spec.bessel_a * spec.bessel_b) * spec.sup_pair;

    std::vector<std::pair<double, double>> out;
    out.reserve(family.size());
    for (const auto& w : family) {
        if (w.terms() != spec.terms())
            throw DimMismatch("convergence_study: family weights length mismatch");
        MultiplierSpec sk = spec;
        sk.lambda = w;
        const ComplexMatrix diff = assemble(sk) - base;
        double dist = 0.0, wdist = 0.0;
        switch (mode) {
            case ConvergenceMode::operator_norm: {
                dist = operator_norm(diff);
                for (Eigen::Index n = 0; n < spec.terms(); ++n)
                    wdist = std::max(wdist,
                                     std::abs(w.values[static_cast<std::size_t>(n)] -
                                              spec.lambda.values[static_cast<std::size_t>(n)]));
                break;
            }
            case ConvergenceMode::nuclear: {
                dist = trace_norm(diff);
                for (Eigen::Index n = 0; n < spec.terms(); ++n)
                    wdist += std::abs(w.values[static_cast<std::size_t>(n)] -
                                      spec.lambda.values[static_cast<std::size_t>(n)]);
                break;
            }
            case ConvergenceMode::hs: {
                dist = frobenius_norm(diff);
                double s = 0.0;
                for (Eigen::Index n = 0; n < spec.terms(); ++n)
                    s += std::norm(w.values[static_cast<std::size_t>(n)] -
                                   spec.lambda.values[static_cast<std::size_t>(n)]);
                wdist = std::sqrt(s);
                break;
            }
        }
        out.emplace_back(dist, c * wdist);
    }
    return out;
}

LowerBoundResult lower_bound(const MultiplierSpec& spec,
                             const std::vector<ComplexVector>& probes) {
    if (!classify(spec.a).is_orthonormal_basis)
        throw PreconditionFailed("lower_bound: A must be an orthonormal basis");
    if (!classify(spec.b).riesz_bounds.has_value())
        throw PreconditionFailed("lower_bound: B must be a Riesz basis");
    for (const auto& g : probes)
        if (g.norm() == 0.0) throw ZeroProbe("lower_bound: zero probe");

    const ComplexMatrix t = riesz_transition(spec.a, spec.b);
    const ComplexMatrix tinv = t.inverse();
    const double tinvNorm = operator_norm(tinv);

    const auto evaluate = [&](const ComplexVector& g) {
        double best = 0.0;
        for (Eigen::Index n = 0; n < spec.terms(); ++n) {
            const auto k = static_cast<std::size_t>(n);
            const double num = std::abs(spec.lambda.values[k] *
                                        inner(g, spec.y.vecs[k])) *
                               spec.x.vecs[k].norm();
            const double den =
                (tinv * (spec.a.ops[k].adjoint() * g)).norm();
            if (den > 0.0) best = std::max(best, num / den);
        }
        return best;
    };

    LowerBoundResult out;
    for (const auto& g : probes) out.probe_lower = std::max(out.probe_lower, evaluate(g));
    for (const auto& g : spec.x.vecs)
        if (g.norm() > 0.0) out.probe_lower = std::max(out.probe_lower, evaluate(g));
    for (const auto& g : spec.y.vecs)
        if (g.norm() > 0.0) out.probe_lower = std::max(out.probe_lower, evaluate(g));

    bool allX = true, allY = true;
    for (const auto& v : spec.x.vecs) allX = allX && v.norm() > 0.0;
    for (const auto& v : spec.y.vecs) allY = allY && v.norm() > 0.0;
    double cf = 0.0;
    if (allX) {
        for (Eigen::Index n = 0; n < spec.terms(); ++n) {
            const auto k = static_cast<std::size_t>(n);
            cf = std::max(cf, std::abs(spec.lambda.values[k] *
                                       inner(spec.x.vecs[k], spec.y.vecs[k])) /
                                  tinvNorm);
        }
    }
    if (allY) {
        for (Eigen::Index n = 0; n < spec.terms(); ++n) {
            const auto k = static_cast<std::size_t>(n);
            cf = std::max(cf, std::abs(spec.lambda.values[k]) *
                                  spec.x.vecs[k].norm() * spec.y.vecs[k].norm() /
                                  tinvNorm);
        }
    }
    out.closed_form_lower = cf;
    out.upper = operator_norm(t) * spec.lambda.sup_norm() * spec.sup_pair;
    return out;
}

WeightSeq recover_lambda(const ComplexMatrix& m, const OpSequence& a,
                         const OpSequence& b, const VectorSeq& x,
                         const VectorSeq& y) {
    if (m.rows() != a.d || m.cols() != a.d)
        throw DimMismatch("recover_lambda: matrix must act on H");
    if (!classify(a).is_orthonormal_basis)
        throw PreconditionFailed("recover_lambda: A must be an orthonormal basis");
    if (!classify(b).riesz_bounds.has_value())
        throw PreconditionFailed("recover_lambda: B must be a Riesz basis");
    for (const auto& v : x.vecs)
        if (v.norm() == 0.0) throw ZeroVector("recover_lambda: zero x_n");
    for (const auto& v : y.vecs)
        if (v.norm() == 0.0) throw ZeroVector("recover_lambda: zero y_n");

    const ComplexMatrix t = riesz_transition(a, b);
    const ComplexMatrix tinv = t.inverse();

    WeightSeq out;
    out.values.reserve(x.vecs.size());
    for (Eigen::Index n = 0; n < a.terms(); ++n) {
        const auto k = static_cast<std::size_t>(n);
        const ComplexVector probe =
            a.ops[k] * (m * (tinv * (a.ops[k].adjoint() * y.vecs[k])));
        out.values.push_back(inner(probe, x.vecs[k]) /
                             (y.vecs[k].squaredNorm() * x.vecs[k].squaredNorm()));
    }
    return out;
}

std::vector<std::pair<Eigen::Index, double>>
unbounded_sweep(const TailLaw& law, Eigen::Index d0,
                const std::vector<Eigen::Index>& sizes, std::uint64_t seed,
                SweepData data) {
    std::vector<std::pair<Eigen::Index, double>> out;
    out.reserve(sizes.size());
    for (const Eigen::Index n : sizes) {
        OpSequence a, b;
        if (data == SweepData::std_slices) {
            a = std_block_onb(d0, n);
            b = a;
        } else {
            a = random_onb(d0, n, mix_seed(seed, static_cast<std::uint64_t>(2 * n)));
            b = random_onb(d0, n, mix_seed(seed, static_cast<std::uint64_t>(2 * n + 1)));
        }
        WeightSeq lambda;
        for (Eigen::Index i = 1; i <= n; ++i)
            lambda.values.emplace_back(law.eval(static_cast<std::uint64_t>(i)), 0.0);
        VectorSeq x;
        ComplexVector e1 = ComplexVector::Zero(d0);
        e1(0) = 1.0;
        for (Eigen::Index i = 0; i < n; ++i) x.vecs.push_back(e1);
        MultiplierSpec spec = make_multiplier_spec(lambda, a, b, x, x);
        out.emplace_back(n, operator_norm(assemble(spec)));
    }
    return out;
}

} // namespace gmult
