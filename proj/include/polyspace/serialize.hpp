#pragma once

// JSON encodings shared by the CLI and its tests:
//   rational       "p/q" in lowest terms
//   polynomial     [{"coeff": "p/q", "exps": [e1, ..., en]}, ...] in grlex order
//   index set      sorted 1-based list
//   signature      list of index sets in canonical order
//   length vector  list of rationals

#include <json.hpp>

#include "polyspace/chambers.hpp"
#include "polyspace/multipoly.hpp"
#include "polyspace/rational.hpp"

namespace polyspace {

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const MultiPoly& p);
nlohmann::json to_json(const IndexSet& s);
nlohmann::json to_json(const ChamberSignature& sig);
nlohmann::json to_json(const LengthVector& r);

Rational rational_from_json(const nlohmann::json& j);
MultiPoly poly_from_json(const nlohmann::json& j, std::size_t nvars);
ChamberSignature signature_from_json(const nlohmann::json& j, std::size_t n);
LengthVector length_vector_from_json(const nlohmann::json& j);

}  // namespace polyspace
