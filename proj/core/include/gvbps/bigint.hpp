#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gvbps {

using BigInt = mpz_class;

// Decimal round trip. Parsing accepts an optional leading '-' or '+'
// followed by digits only and throws Error{ParseError} otherwise.
std::string to_decimal(const BigInt& value);
BigInt parse_decimal(std::string_view text);

// (-1)^n for any signed n.
constexpr int sign_pow(long long n) noexcept { return (n % 2 == 0) ? 1 : -1; }

}  // namespace gvbps
