#include "ibc/error.hpp"

namespace ibc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonInvertible: return "NonInvertible";
    case Errc::Unsupported: return "Unsupported";
    case Errc::SeedTooLarge: return "SeedTooLarge";
    case Errc::MissingRoot: return "MissingRoot";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::SingularDenominator: return "SingularDenominator";
    case Errc::DomainError: return "DomainError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::AbortZeroIndex: return "AbortZeroIndex";
    case Errc::AbortSingular: return "AbortSingular";
    case Errc::AbortNonInvertible: return "AbortNonInvertible";
    case Errc::RejectDenominator: return "RejectDenominator";
    case Errc::RejectHash: return "RejectHash";
    case Errc::RejectRange: return "RejectRange";
    case Errc::BadLength: return "BadLength";
    case Errc::FieldOverflow: return "FieldOverflow";
    case Errc::NonceReuse: return "NonceReuse";
  }
  return "Unknown";
}

}  // namespace ibc
