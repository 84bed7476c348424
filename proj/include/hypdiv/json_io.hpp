#pragma once

// JSON encodings. Scalars: rationals as "n/d" (or "n"), finite-field
// elements as coefficient arrays lowest degree first, quadratic number field
// elements as arrays of two rational strings. Readers also accept plain
// integers and ignore unknown keys; malformed input raises parse_error.

#include <json.hpp>

#include "hypdiv/galois.hpp"

namespace hypdiv {

using Json = nlohmann::ordered_json;

/// {"p": int or null, "m": int, "modulus": [...]}; the modulus is omitted
/// for prime fields and the rationals.
Json field_to_json(Field f);
Field field_from_json(const Json& j);

Json scalar_to_json(const FieldElement& x);
FieldElement scalar_from_json(const Json& j, Field f);

Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j, Field f);

/// {"field": ..., "coeffs": [...]}
Json curve_to_json(const Curve& c);
Curve curve_from_json(const Json& j);

/// {"field": ..., "u": [...], "v": [...], "w": [...]}; "field" defaults to
/// the curve's field on input.
Json triple_to_json(const Triple& t);
Triple triple_from_json(const Json& j, const Curve& curve);

/// Row-major array of rows.
Json matrix_to_json(const Matrix& m);
/// Either a bare row-major array (over `f`) or {"field": ..., "entries": [...]}.
Matrix matrix_from_json(const Json& j, Field f);
/// The field named by an object-form matrix, else `f`.
Field matrix_field(const Json& j, Field f);

OrthMatrix orth_from_json(const Json& j, Field f);

/// Gram matrices use the matrix encoding; symmetry is checked on load.
GramForm gram_from_json(const Json& j, Field f);

Json errc_json(const Error& e);

/// Parses text, mapping syntax errors to parse_error.
Json parse_json(const std::string& text);

}  // namespace hypdiv
