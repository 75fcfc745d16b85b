#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gvbps/bigint.hpp"
#include "gvbps/trunc_series.hpp"

namespace gvbps::detail {

// Basis element q^shift (1 + sign*q)^power. Every basis in this library has
// leading coefficient 1 at q^shift.
struct BinomialBasisElement {
  int shift;
  int power;
  Sign sign;
};

// Expands one basis element exactly on [shift, order].
TruncSeries expand_basis(const BinomialBasisElement& b, int order);

struct PeelResult {
  // Indexed by r = 0..top.
  std::vector<BigInt> coeffs;
  // Lowest exponent where the residual is nonzero, if any.
  std::optional<int> residual_exponent;
  BigInt residual_value;
  int checked_order;
};

// Solves series = sum_{r=0}^{top} n_r basis(r) by a unit-triangular peel.
// basis(r) must have strictly increasing shift as r decreases, so r = top
// is peeled first at the lowest exponent. The residual is checked over the
// whole window of `series`; the caller decides whether it is fatal.
PeelResult peel(const TruncSeries& series, int top,
                const std::function<BinomialBasisElement(int)>& basis);

}  // namespace gvbps::detail
