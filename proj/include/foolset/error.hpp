#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foolset {

enum class Errc {
  NotPrime,
  OutOfRange,
  FieldMismatch,
  DivisionByZero,
  InvalidOrder,
  Irreversible,
  LengthMismatch,
  CapExceeded,
  SizeLimit,
  NotSquare,
  TooLarge,
  CellOutsideSupport,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace foolset
