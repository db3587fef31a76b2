#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "nilcommute/algebra.hpp"
#include "nilcommute/certificate.hpp"

namespace nilcommute {

// JSON forms. Scalars and matrix entries are always strings so that exact
// values survive any JSON reader; counts and dimensions are numbers.
//
//   field:       {"kind": "q"} | {"kind": "fp", "p": 7}
//   matrix:      {"field": <field>, "rows": [["0", "1"], ["0", "0"]]}
//   tuple:       {"field": <field>, "n": 2, "mats": [<rows>, ...]}
//   certificate: {"name", "verdict", "field", "seed", "trials",
//                 "evidence": [{"label", "value"}, ...], "version"}
//
// Parsers throw SchemaError with the path of the offending element.

nlohmann::json json_of_field(const FieldSpec& f);
FieldSpec field_of_json(const nlohmann::json& j, const std::string& path = "field");

nlohmann::json json_of_matrix(const Matrix& m);
Matrix matrix_of_json(const nlohmann::json& j, const std::string& path = "matrix");

nlohmann::json json_of_tuple(const NilTuple& t);
NilTuple tuple_of_json(const nlohmann::json& j, const std::string& path = "tuple");

nlohmann::json json_of_certificate(const Certificate& c);
Certificate certificate_of_json(const nlohmann::json& j, const std::string& path = "certificate");

// Canonical byte form: 2-space indent, alphabetical object keys, one
// trailing newline. Equal certificates serialize to equal bytes.
std::string certificate_to_string(const Certificate& c);

}  // namespace nilcommute
