#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "supertrop/matrix.hpp"

namespace supertrop {

/// Text format: one row per line, scalar tokens whitespace-separated.
/// Throws ParseError (with line/column) and RaggedRows.
Matrix parse_matrix(std::string_view text);
/// All tokens in the text, in reading order.
Vector parse_vector(std::string_view text);

std::string format_matrix(const Matrix& m);
std::string format_vector(const Vector& v);

/// JSON mirror: scalar {"v": "p/q"|null, "g": bool}; matrix array-of-arrays;
/// vector plain array. Round-trips bit-exactly.
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

}  // namespace supertrop
