#include "gvbps/detail/peel.hpp"

#include <algorithm>
#include <string>

#include "gvbps/error.hpp"

namespace gvbps::detail {

TruncSeries expand_basis(const BinomialBasisElement& b, int order) {
  return binom_pow(b.power, b.sign, order - b.shift).shifted(b.shift);
}

PeelResult peel(const TruncSeries& series, int top,
                const std::function<BinomialBasisElement(int)>& basis) {
  const int order = series.order();
  const int lo = std::min(series.min_exp(), basis(top).shift);

  std::vector<BigInt> residual(static_cast<std::size_t>(std::max(0, order - lo + 1)));
  for (int e = series.min_exp(); e <= order; ++e) residual[e - lo] = series.at(e);

  PeelResult result;
  result.coeffs.resize(static_cast<std::size_t>(top) + 1);
  result.checked_order = order;

  for (int r = top; r >= 0; --r) {
    const BinomialBasisElement b = basis(r);
    if (b.shift > order) {
      throw Error(Errc::InsufficientWindow,
                  "coefficient of q^" + std::to_string(b.shift) +
                      " is needed but the window ends at q^" + std::to_string(order),
                  b.shift);
    }
    BigInt n = residual[b.shift - lo];
    if (n != 0) {
      TruncSeries element = expand_basis(b, order);
      for (int e = b.shift; e <= order; ++e) {
        mpz_submul(residual[e - lo].get_mpz_t(), n.get_mpz_t(), element.at(e).get_mpz_t());
      }
    }
    result.coeffs[r] = std::move(n);
  }

  for (int e = lo; e <= order; ++e) {
    if (residual[e - lo] != 0) {
      result.residual_exponent = e;
      result.residual_value = residual[e - lo];
      break;
    }
  }
  return result;
}

}  // namespace gvbps::detail
