#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gvbps {

enum class Errc {
  EmptyWindow,
  NonUnitLeading,
  NotBpsForm,
  InsufficientWindow,
  MilnorMismatch,
  AsymmetricInput,
  NotKkvForm,
  InvalidArgument,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Failure of a library operation. `exponent()` names the offending
/// q-exponent (or z-exponent for the KKV peel) when the failure is tied to
/// a single coefficient.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<int> exponent = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<int> exponent() const noexcept { return exponent_; }

 private:
  Errc code_;
  std::optional<int> exponent_;
};

}  // namespace gvbps
