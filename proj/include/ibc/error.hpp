#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ibc {

enum class Errc {
  NonInvertible,
  Unsupported,
  SeedTooLarge,
  MissingRoot,
  SingularPoint,
  SingularDenominator,
  DomainError,
  InvalidArgument,
  OutOfRange,
  AbortZeroIndex,
  AbortSingular,
  AbortNonInvertible,
  RejectDenominator,
  RejectHash,
  RejectRange,
  BadLength,
  FieldOverflow,
  NonceReuse,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure the library signals carries one of the codes above; callers
// that implement abort-and-redraw switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ibc
