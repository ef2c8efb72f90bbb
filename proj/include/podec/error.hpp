#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace podec {

enum class ErrorCode {
  invalid_argument,
  duplicate_label,
  unknown_element,
  cycle,
  bottom_not_minimum,
  guardrail,
  not_orthocomplemented,
  not_lower_complete_sublattice,
  not_in_z,
  hypothesis_not_satisfied,
  search_exhausted,
  parse_error,
};

const char *to_string(ErrorCode code);

/// Library error. `line()` is non-zero only for parse errors.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what, std::size_t line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }

private:
  ErrorCode code_;
  std::size_t line_;
};

} // namespace podec
