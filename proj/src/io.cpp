#include "supertrop/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace supertrop {

namespace {

struct Token {
  std::string text;
  std::size_t line;  // 1-based
  std::size_t col;   // 1-based
};

std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const std::size_t tok_start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      toks.push_back({std::string(line.substr(tok_start, i - tok_start)), line_no, tok_start + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

Scalar parse_token(const Token& t) {
  try {
    return Scalar::parse(t.text);
  } catch (const domain_error& e) {
    throw domain_error(errc::parse_error, std::string(e.what()) + " at line " +
                                              std::to_string(t.line) + ", column " +
                                              std::to_string(t.col));
  }
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw domain_error(errc::parse_error, "empty matrix");
  const std::size_t cols = lines.front().size();
  for (const auto& row : lines)
    if (row.size() != cols)
      throw domain_error(errc::ragged_rows,
                         "row at line " + std::to_string(row.front().line) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(cols));
  Matrix m(lines.size(), cols);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = parse_token(lines[i][j]);
  return m;
}

Vector parse_vector(std::string_view text) {
  Vector v;
  for (const auto& row : tokenize_lines(text))
    for (const auto& tok : row) v.push_back(parse_token(tok));
  if (v.empty()) throw domain_error(errc::parse_error, "empty vector");
  return v;
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.at(i, j).token();
    }
    os << '\n';
  }
  return os.str();
}

std::string format_vector(const Vector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i].token();
  }
  os << '\n';
  return os.str();
}

nlohmann::json scalar_to_json(const Scalar& s) {
  nlohmann::json j;
  j["v"] = s.is_zero() ? nlohmann::json() : nlohmann::json(rat_to_string(s.value()));
  j["g"] = s.is_ghost();
  return j;
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("v") || !j.contains("g"))
    throw domain_error(errc::parse_error, "scalar JSON must be {\"v\":..., \"g\":...}");
  if (j["v"].is_null()) return Scalar::zero();
  const std::string body = j["v"].get<std::string>();
  const Scalar s = Scalar::parse(body);
  if (!s.is_tangible())
    throw domain_error(errc::parse_error, "scalar JSON value must be a bare rational");
  return j["g"].get<bool>() ? s.nu() : s;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw domain_error(errc::parse_error, "matrix JSON must be a non-empty array");
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw domain_error(errc::parse_error, "matrix JSON rows must be non-empty arrays");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw domain_error(errc::ragged_rows, "matrix JSON row " + std::to_string(i));
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j[i][c]);
  }
  return m;
}

nlohmann::json vector_to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vector vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw domain_error(errc::parse_error, "vector JSON must be an array");
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

}  // namespace supertrop
