#pragma once

#include <stdexcept>
#include <string>

namespace supertrop {

/// Domain error codes. Names are stable; the CLI prints them verbatim.
enum class errc {
  division_by_zero,
  dimension_mismatch,
  not_square,
  size_cap_exceeded,
  singular_matrix,
  non_tangible_rhs,
  not_singular,
  zero_determinant,
  not_quasi_tangible,
  non_tangible_matrix,
  ambiguous_j,
  malformed_expression,
  guard_unsatisfiable,
  parse_error,
  ragged_rows,
};

const char* errc_name(errc code) noexcept;

class domain_error : public std::runtime_error {
 public:
  domain_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  errc code_;
};

}  // namespace supertrop
