#pragma once

#include <stdexcept>
#include <string>

namespace pibeta {

enum class ErrorCode {
  zero_denominator,
  division_by_zero,
  domain,
  internal_consistency,
  precision,
  parse,
  usage,
};

/// Base of every error raised by the library. Carries a machine-readable code
/// so the CLI can map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* to_string(ErrorCode code) noexcept;

}  // namespace pibeta
