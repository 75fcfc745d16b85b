#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "gvbps/bigint.hpp"

namespace gvbps {

/// Finite Laurent polynomial in one variable with exact integer
/// coefficients. Zero coefficients are never stored, so two polynomials are
/// equal iff their term maps are equal.
class LaurentPoly {
 public:
  using TermMap = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const int, BigInt>> terms);
  explicit LaurentPoly(TermMap terms);

  static LaurentPoly monomial(BigInt coeff, int exponent);

  const TermMap& terms() const noexcept { return terms_; }
  BigInt coeff(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Only meaningful when !is_zero().
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  void add_term(int exponent, const BigInt& coeff);

  /// z -> z^{-1}.
  LaurentPoly reflected() const;
  /// z -> -z.
  LaurentPoly sign_substituted() const;
  /// Sum of coefficients (value at z = 1).
  BigInt evaluate_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const BigInt& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const BigInt& s) { return a *= s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

enum class ArithOp { Add, Mul };

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);

/// True iff the coefficient of z^k equals that of z^{-k} for every k.
bool involution_check(const LaurentPoly& p);

}  // namespace gvbps
