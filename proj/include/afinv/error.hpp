#pragma once

#include <stdexcept>
#include <string>

namespace afinv {

enum class errc {
  non_integral_division,
  degree_bound_exceeded,
  no_root_in_unit_interval,
  gcd_not_one,
  not_in_class,
  lambda_irrational,
  wrong_rank,
  iteration_cap_exceeded,
  shape_mismatch,
  non_integral_scaled_inverse,
  invalid_cuts,
  depth_too_shallow,
  budget_exceeded,
  unknown_table,
  parse_error,
  invalid_argument,
  internal,
};

// Canonical name, used in error messages and CLI diagnostics.
const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) { throw Error(code, detail); }

} // namespace afinv
