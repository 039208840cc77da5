#ifndef SEMICELL_JSON_IO_HPP
#define SEMICELL_JSON_IO_HPP

#include <json.hpp>

#include "semicell/instances.hpp"
#include "semicell/triangular.hpp"

namespace semicell {

using nlohmann::json;

json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const json& j);

/// Rationals and prime-field elements encode as strings ("−3/4", "5");
/// rational functions as {"num": [...], "den": [...]} coefficient lists
/// over the base field, low degree first.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const FieldPtr& f);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"algebra": "toy"|"matrix"|"hecke", "n": ..., "field": ..., "q": ...,
///  "contents": [...]}
Instance instance_from_json(const json& j, bool override_gates = false);

/// {"d": ..., "field": ..., "matrices": [[...], ...]}
TriangularFamily family_from_json(const json& j);

}  // namespace semicell

#endif
