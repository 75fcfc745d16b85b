#include "gvbps/laurent_poly.hpp"

namespace gvbps {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, BigInt>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly::LaurentPoly(TermMap terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::sign_substituted() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace(e, sign_pow(e) > 0 ? c : BigInt(-c));
  }
  return out;
}

BigInt LaurentPoly::evaluate_at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, BigInt(-c));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  BigInt product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      product = ca * cb;
      out.add_term(ea + eb, product);
    }
  }
  return out;
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op) {
  return op == ArithOp::Add ? a + b : a * b;
}

bool involution_check(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (e != 0 && p.coeff(-e) != c) return false;
  }
  return true;
}

}  // namespace gvbps
