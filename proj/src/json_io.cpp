#include "qcanon/json_io.hpp"

#include "qcanon/error.hpp"

namespace qcanon {

Json to_json(const QScalar& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, c.get_str()}));
  return out;
}

QScalar qscalar_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "Laurent polynomial must be a list of terms");
  QScalar p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string()) {
      throw Error(ErrorCode::ParseError, "term must be [exponent, \"integer\"]");
    }
    BigInt c;
    if (c.set_str(term[1].get<std::string>(), 10) != 0) {
      throw Error(ErrorCode::ParseError, "bad integer \"" + term[1].get<std::string>() + "\"");
    }
    p += QScalar::monomial(c, term[0].get<int>());
  }
  return p;
}

Json basis_to_json(const WeightSpace& w, const std::vector<BasisVector>& basis) {
  Json list = Json::array();
  for (const auto& b : basis) {
    Json coeffs = Json::array();
    for (std::size_t k = 0; k < b.coords.size(); ++k) {
      if (b.coords[k].is_zero()) continue;
      coeffs.push_back({{"index", w.index(k)}, {"value", to_json(b.coords[k])}});
    }
    list.push_back({{"index", b.index}, {"coeffs", std::move(coeffs)}});
  }
  return {{"schema", kSchema},
          {"lambda", w.module().highest_weights()},
          {"level", w.level()},
          {"weight", w.weight()},
          {"order", "lex"},
          {"basis", std::move(list)}};
}

std::vector<BasisVector> basis_from_json(const Json& j, const WeightSpace& w) {
  std::vector<BasisVector> out;
  try {
    for (const auto& item : j.at("basis")) {
      BasisVector b{item.at("index").get<MultiIndex>(), QVector(w.dim())};
      for (const auto& c : item.at("coeffs")) {
        b.coords[w.position_of(c.at("index").get<MultiIndex>())] = qscalar_from_json(c.at("value"));
      }
      out.push_back(std::move(b));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return out;
}

Json diagram_to_json(const ArcDiagram& d) {
  Json chords = Json::array();
  for (const auto& [i, j] : d.chords) chords.push_back(Json::array({i, j}));
  return {{"points", d.points()}, {"capacities", d.capacities}, {"chords", std::move(chords)}};
}

ArcDiagram diagram_from_json(const Json& j) {
  try {
    std::vector<Chord> chords;
    for (const auto& c : j.at("chords")) chords.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    auto caps = j.at("capacities").get<std::vector<int>>();
    if (j.contains("points") && j.at("points").get<int>() != static_cast<int>(caps.size())) {
      throw Error(ErrorCode::ParseError, "points and capacities disagree");
    }
    return make_diagram(std::move(caps), std::move(chords));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json operator_to_json(const BraidOperator& op) {
  Json entries = Json::array();
  for (std::size_t c = 0; c < op.matrix.cols(); ++c) {
    for (const auto& [r, v] : op.matrix.column(c)) {
      entries.push_back({{"row", op.target.index(r)}, {"col", op.source.index(c)}, {"value", to_json(v)}});
    }
  }
  return {{"schema", kSchema},
          {"op", to_string(op.tag)},
          {"source_lambda", op.source.module().highest_weights()},
          {"target_lambda", op.target.module().highest_weights()},
          {"dual", op.source.module().is_dual()},
          {"level", op.source.level()},
          {"weight", op.source.weight()},
          {"rows", op.target.indices()},
          {"cols", op.source.indices()},
          {"entries", std::move(entries)}};
}

Json report_to_json(const CablingReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json item = {{"source", e.source}, {"source_diagram", diagram_to_json(e.source_diagram)}, {"killed", e.killed}};
    if (!e.killed) {
      item["target"] = *e.target;
      item["expected_target"] = *e.expected_target;
      item["scalar"] = to_json(e.scalar);
      item["index_match"] = e.index_match;
      item["unit_scalar"] = e.unit_scalar;
    }
    entries.push_back(std::move(item));
  }
  return {{"schema", kSchema},
          {"lambda", r.lambda},
          {"level", r.level},
          {"entries", std::move(entries)},
          {"all_index_match", r.all_index_match},
          {"all_scalars_unit", r.all_scalars_unit},
          {"all_scalars_one", r.all_scalars_one}};
}

}  // namespace qcanon
