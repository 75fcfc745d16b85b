#include "gvbps/error.hpp"

namespace gvbps {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyWindow: return "EmptyWindow";
    case Errc::NonUnitLeading: return "NonUnitLeading";
    case Errc::NotBpsForm: return "NotBpsForm";
    case Errc::InsufficientWindow: return "InsufficientWindow";
    case Errc::MilnorMismatch: return "MilnorMismatch";
    case Errc::AsymmetricInput: return "AsymmetricInput";
    case Errc::NotKkvForm: return "NotKkvForm";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::optional<int> exponent)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      exponent_(exponent) {}

}  // namespace gvbps
