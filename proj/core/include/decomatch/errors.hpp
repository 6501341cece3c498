#pragma once

#include <stdexcept>
#include <string>

namespace decomatch {

// Error codes shared across the library. The CLI maps validation errors to
// exit code 3 and numeric/domain errors to exit code 4.
enum class errc {
  non_positive_speed,
  non_positive_job,
  non_finite_value,
  empty_machines,
  dimension_mismatch,
  too_large,
  zero_trials,
  parse_error,
  io_error,
  domain_error,
  no_maximum_in_range,
  non_termination,
  numeric_overflow,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// True for errors caused by bad inputs, as opposed to numeric/domain failures
// inside an otherwise valid computation.
inline bool is_validation_error(errc c) noexcept {
  switch (c) {
    case errc::non_positive_speed:
    case errc::non_positive_job:
    case errc::non_finite_value:
    case errc::empty_machines:
    case errc::dimension_mismatch:
    case errc::too_large:
    case errc::zero_trials:
    case errc::parse_error:
    case errc::io_error:
      return true;
    default:
      return false;
  }
}

[[noreturn]] inline void throw_error(errc code, const std::string& what) { throw error(code, what); }

}  // namespace decomatch
