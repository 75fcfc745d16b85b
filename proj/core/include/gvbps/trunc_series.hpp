#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gvbps/bigint.hpp"
#include "gvbps/laurent_poly.hpp"

namespace gvbps {

/// Laurent series in q with exact integer coefficients.
///
/// The window [min_exp, order] holds exactly known coefficients. Every
/// coefficient below min_exp is zero; nothing is known above order (the
/// series is `... + O(q^{order+1})`). An empty window (order == min_exp - 1)
/// is the series O(q^{min_exp}).
class TruncSeries {
 public:
  /// The zero series with window [min_exp, order].
  TruncSeries(int min_exp, int order);
  /// `coeffs[i]` is the coefficient of q^{min_exp+i}; missing trailing
  /// entries are zero. Throws InvalidArgument if coeffs overflow the window.
  TruncSeries(int min_exp, int order, std::vector<BigInt> coeffs);

  /// Exact polynomial (or Laurent polynomial) known up to `order`.
  static TruncSeries from_poly(const LaurentPoly& p, int order);
  static TruncSeries one(int order) { return from_poly(LaurentPoly{{0, 1}}, order); }

  int min_exp() const noexcept { return min_exp_; }
  int order() const noexcept { return order_; }
  bool empty() const noexcept { return order_ < min_exp_; }
  bool in_window(int exponent) const noexcept { return exponent <= order_; }

  /// Coefficient of q^exponent. Zero below the window; throws
  /// InsufficientWindow above it.
  BigInt coeff(int exponent) const;
  const BigInt& at(int exponent) const { return coeffs_[exponent - min_exp_]; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  /// Lowest exponent with a nonzero coefficient, if any inside the window.
  std::optional<int> valuation() const;
  /// valuation(), or order + 1 when the window is all zero: the exponent at
  /// which the series is known to start.
  int known_valuation() const;

  TruncSeries truncated(int new_order) const;
  /// Multiplication by q^k.
  TruncSeries shifted(int k) const;
  TruncSeries scaled(const BigInt& factor) const;
  /// Drops leading zeros so that min_exp becomes the valuation.
  TruncSeries normalized() const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  int min_exp_;
  int order_;
  std::vector<BigInt> coeffs_;
};

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b, ArithOp op);

/// Multiplicative inverse up to q^order (or less, if the input window cannot
/// determine that many terms). The lowest nonzero coefficient must be +-1.
TruncSeries series_inverse(const TruncSeries& a, int order);

enum class Sign { Plus, Minus };

/// (1 + q)^e or (1 - q)^e up to q^order, for any signed e.
TruncSeries binom_pow(int e, Sign sign, int order);

/// q -> -q.
TruncSeries q_negate(const TruncSeries& a);

/// True when every coefficient known to both series is equal.
bool agree_on_common_window(const TruncSeries& a, const TruncSeries& b);

}  // namespace gvbps
