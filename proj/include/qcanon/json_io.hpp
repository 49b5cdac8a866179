#pragma once

// Deterministic JSON encodings.  Laurent polynomials are lists of
// [v-exponent, "integer"] pairs in ascending exponent order; integers travel
// as strings so that arbitrary precision survives every JSON reader.

#include <json.hpp>

#include <vector>

#include "qcanon/cabling.hpp"
#include "qcanon/canonical.hpp"
#include "qcanon/diagrams.hpp"
#include "qcanon/qring.hpp"
#include "qcanon/rmatrix.hpp"

namespace qcanon {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "qcanon/1";

Json to_json(const QScalar& p);
/// Throws ParseError on malformed input.
QScalar qscalar_from_json(const Json& j);

Json basis_to_json(const WeightSpace& w, const std::vector<BasisVector>& basis);
/// Inverse of basis_to_json for the coordinate data (index and coefficients).
std::vector<BasisVector> basis_from_json(const Json& j, const WeightSpace& w);

Json diagram_to_json(const ArcDiagram& d);
ArcDiagram diagram_from_json(const Json& j);

Json operator_to_json(const BraidOperator& op);
Json report_to_json(const CablingReport& r);

}  // namespace qcanon
