#include "gmult/json_io.hpp"

#include <cmath>

namespace gmult {

namespace {

nlohmann::json complex_to_json(const Complex& c) {
    return nlohmann::json::array({c.real(), c.imag()});
}

Complex complex_from_json(const nlohmann::json& j, const char* where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(std::string(where) + ": complex scalar must be [re, im]");
    const Complex c(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw ValidationError(std::string(where) + ": non-finite entry");
    return c;
}

const nlohmann::json& field(const nlohmann::json& j, const char* key,
                            const char* where) {
    if (!j.is_object())
        throw ParseError(std::string(where) + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(where) + ": missing field '" + key + "'");
    return *it;
}

Eigen::Index positive_index(const nlohmann::json& j, const char* key,
                            const char* where) {
    const auto& f = field(j, key, where);
    if (!f.is_number_integer() || f.get<long long>() <= 0)
        throw ValidationError(std::string(where) + ": '" + key +
                              "' must be a positive integer");
    return static_cast<Eigen::Index>(f.get<long long>());
}

} // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            entries.push_back(complex_to_json(m(i, j)));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    const Eigen::Index rows = positive_index(j, "rows", "matrix");
    const Eigen::Index cols = positive_index(j, "cols", "matrix");
    const auto& entries = field(j, "entries", "matrix");
    if (!entries.is_array() ||
        static_cast<Eigen::Index>(entries.size()) != rows * cols)
        throw ValidationError("matrix: entries count must equal rows * cols");
    ComplexMatrix m(rows, cols);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index jj = 0; jj < cols; ++jj)
            m(i, jj) = complex_from_json(entries[static_cast<std::size_t>(k++)],
                                         "matrix");
    return m;
}

nlohmann::json vector_to_json(const ComplexVector& v) {
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        entries.push_back(complex_to_json(v(i)));
    return {{"dim", v.size()}, {"entries", entries}};
}

ComplexVector vector_from_json(const nlohmann::json& j) {
    const Eigen::Index dim = positive_index(j, "dim", "vector");
    const auto& entries = field(j, "entries", "vector");
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != dim)
        throw ValidationError("vector: entries count must equal dim");
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        v(i) = complex_from_json(entries[static_cast<std::size_t>(i)], "vector");
    return v;
}

nlohmann::json tail_law_to_json(const TailLaw& t) {
    const char* kind = t.kind == TailLaw::Kind::none        ? "none"
                       : t.kind == TailLaw::Kind::geometric ? "geometric"
                                                            : "power";
    return {{"kind", kind}, {"param", t.param}};
}

TailLaw tail_law_from_json(const nlohmann::json& j) {
    TailLaw t;
    const auto& kind = field(j, "kind", "tailLaw");
    if (!kind.is_string()) throw ParseError("tailLaw: 'kind' must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "none")
        t.kind = TailLaw::Kind::none;
    else if (k == "geometric")
        t.kind = TailLaw::Kind::geometric;
    else if (k == "power")
        t.kind = TailLaw::Kind::power;
    else
        throw ValidationError("tailLaw: unknown kind '" + k + "'");
    if (j.contains("param")) {
        if (!j["param"].is_number()) throw ParseError("tailLaw: 'param' must be a number");
        t.param = j["param"].get<double>();
    }
    return t;
}

nlohmann::json op_sequence_to_json(const OpSequence& a) {
    nlohmann::json ops = nlohmann::json::array();
    for (const auto& op : a.ops) ops.push_back(matrix_to_json(op));
    return {{"d", a.d}, {"d0", a.d0}, {"ops", ops},
            {"tailLaw", tail_law_to_json(a.tail)}};
}

OpSequence op_sequence_from_json(const nlohmann::json& j) {
    OpSequence a;
    a.d = positive_index(j, "d", "opSequence");
    a.d0 = positive_index(j, "d0", "opSequence");
    const auto& ops = field(j, "ops", "opSequence");
    if (!ops.is_array()) throw ParseError("opSequence: 'ops' must be an array");
    for (const auto& m : ops) a.ops.push_back(matrix_from_json(m));
    if (j.contains("tailLaw")) a.tail = tail_law_from_json(j["tailLaw"]);
    validate(a);
    return a;
}

nlohmann::json weights_to_json(const WeightSeq& w) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : w.values) values.push_back(complex_to_json(v));
    const char* tag = w.tag == WeightSeq::ClassTag::linf ? "linf"
                      : w.tag == WeightSeq::ClassTag::c0 ? "c0"
                      : w.tag == WeightSeq::ClassTag::l1 ? "l1"
                                                         : "l2";
    return {{"values", values}, {"classTag", tag},
            {"tailLaw", tail_law_to_json(w.tail)}};
}

WeightSeq weights_from_json(const nlohmann::json& j) {
    WeightSeq w;
    const auto& values = field(j, "values", "weights");
    if (!values.is_array()) throw ParseError("weights: 'values' must be an array");
    for (const auto& v : values)
        w.values.push_back(complex_from_json(v, "weights"));
    if (j.contains("classTag")) {
        const std::string tag = j["classTag"].get<std::string>();
        if (tag == "linf")
            w.tag = WeightSeq::ClassTag::linf;
        else if (tag == "c0")
            w.tag = WeightSeq::ClassTag::c0;
        else if (tag == "l1")
            w.tag = WeightSeq::ClassTag::l1;
        else if (tag == "l2")
            w.tag = WeightSeq::ClassTag::l2;
        else
            throw ValidationError("weights: unknown classTag '" + tag + "'");
    }
    if (j.contains("tailLaw")) w.tail = tail_law_from_json(j["tailLaw"]);
    return w;
}

nlohmann::json vector_seq_to_json(const VectorSeq& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v.vecs) out.push_back(vector_to_json(x));
    return out;
}

VectorSeq vector_seq_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("vectorSeq: expected an array of vectors");
    VectorSeq v;
    for (const auto& x : j) v.vecs.push_back(vector_from_json(x));
    return v;
}

nlohmann::json multiplier_spec_to_json(const MultiplierSpec& s) {
    return {{"lambda", weights_to_json(s.lambda)},
            {"A", op_sequence_to_json(s.a)},
            {"B", op_sequence_to_json(s.b)},
            {"x", vector_seq_to_json(s.x)},
            {"y", vector_seq_to_json(s.y)}};
}

MultiplierSpec multiplier_spec_from_json(const nlohmann::json& j) {
    return make_multiplier_spec(weights_from_json(field(j, "lambda", "multiplier")),
                                op_sequence_from_json(field(j, "A", "multiplier")),
                                op_sequence_from_json(field(j, "B", "multiplier")),
                                vector_seq_from_json(field(j, "x", "multiplier")),
                                vector_seq_from_json(field(j, "y", "multiplier")));
}

nlohmann::json ghs_context_to_json(const GhsContext& ctx) {
    return {{"theta", matrix_to_json(ctx.theta.matrix)},
            {"F", op_sequence_to_json(ctx.f)},
            {"x", vector_seq_to_json(ctx.x)}};
}

GhsContext ghs_context_from_json(const nlohmann::json& j) {
    return make_ghs_context(
        ConjLinearIsometry{matrix_from_json(field(j, "theta", "ghsContext"))},
        op_sequence_from_json(field(j, "F", "ghsContext")),
        vector_seq_from_json(field(j, "x", "ghsContext")));
}

} // namespace gmult
