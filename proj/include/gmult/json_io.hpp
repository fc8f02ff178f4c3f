#pragma once

#include <json.hpp>

#include "gmult/schatten.hpp"

namespace gmult {

/// Wire formats. Complex scalars are two-element arrays [re, im]; matrices
/// carry row-major entries.

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const nlohmann::json& j);

nlohmann::json tail_law_to_json(const TailLaw& t);
TailLaw tail_law_from_json(const nlohmann::json& j);

nlohmann::json op_sequence_to_json(const OpSequence& a);
OpSequence op_sequence_from_json(const nlohmann::json& j);

nlohmann::json weights_to_json(const WeightSeq& w);
WeightSeq weights_from_json(const nlohmann::json& j);

nlohmann::json vector_seq_to_json(const VectorSeq& v);
VectorSeq vector_seq_from_json(const nlohmann::json& j);

nlohmann::json multiplier_spec_to_json(const MultiplierSpec& s);
MultiplierSpec multiplier_spec_from_json(const nlohmann::json& j);

nlohmann::json ghs_context_to_json(const GhsContext& ctx);
GhsContext ghs_context_from_json(const nlohmann::json& j);

} // namespace gmult
