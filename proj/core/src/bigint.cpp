#include "gvbps/bigint.hpp"

#include <cctype>

#include "gvbps/error.hpp"

namespace gvbps {

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw Error(Errc::ParseError, "empty integer literal '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(Errc::ParseError, "invalid integer literal '" + std::string(text) + "'");
    }
  }
  // mpz_set_str rejects a leading '+'.
  std::string normalized(text.front() == '+' ? text.substr(1) : text);
  return BigInt(normalized, 10);
}

}  // namespace gvbps
