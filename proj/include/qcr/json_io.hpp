#pragma once

#include <json.hpp>

#include "qcr/conjugations.hpp"
#include "qcr/fstructures.hpp"
#include "qcr/models.hpp"
#include "qcr/twistor.hpp"

namespace qcr::io {

// Insertion-ordered keys keep emitted documents in a readable, fixed order.
using Json = nlohmann::ordered_json;

// Every reader throws ParseError on a schema mismatch.

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const RationalMatrix& m);
/// `cols` is required to give shape to an empty row list.
RationalMatrix matrix_from_json(const Json& j, std::size_t cols);
RationalMatrix square_matrix_from_json(const Json& j);

Json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const Json& j);
Json to_json(const Matrix<Quaternion>& m);
Matrix<Quaternion> quaternion_matrix_from_json(const Json& j);

/// {"dim", "I", "J", "K"}.
Json to_json(const HypercomplexStructure& s);
HypercomplexStructure structure_from_json(const Json& j);

/// {"structure", "subspace"}.
Json to_json(const Pair& p);
/// Accepts a bare pair or any document carrying one under "pair".
Pair pair_from_json(const Json& j);

/// {"cr", "cocr", "minus", "plus"}; plus is a list or {"torsion": [...]}.
Json to_json(const SheafReport& r);
SheafReport report_from_json(const Json& j);

/// [{"tag", "k"}, ...].
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

/// {"structure", "u", "v"}.
Json to_json(const FQuatTriple& t);
FQuatTriple triple_from_json(const Json& j);

/// {"A", "q", "B"}.
Json to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j);

/// {"u", "iso", "rotation"}.
Json to_json(const RealForm& f);
RealForm real_form_from_json(const Json& j);

/// {"error": {"name", "module", "message", "details"}}.
Json error_document(const Error& e);
/// Rethrows the error carried by an upstream error document, if any.
void forward_upstream_error(const Json& j);

Json parse_document(const std::string& text);

}  // namespace qcr::io
