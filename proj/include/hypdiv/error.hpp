#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypdiv {

enum class Errc {
  division_by_zero,
  descriptor_mismatch,
  invalid_field,
  not_finite_field,
  not_supported,
  zero_polynomial,
  not_squarefree,
  wrong_degree_parity,
  zero_leading_coefficient,
  characteristic_two,
  length_mismatch,
  degree_too_high,
  not_on_curve,
  zero_form,
  rationals_unsupported,
  not_orthogonal,
  zero_scale,
  field_too_large,
  degenerate_result,
  search_exhausted,
  gram_mismatch,
  factorization_needs_extension,
  not_in_qc,
  budget_exhausted,
  rationals_need_hint,
  not_in_ambient,
  parse_error,
  not_symmetric,
};

/// Stable CamelCase name used in machine-readable error reports.
std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hypdiv
