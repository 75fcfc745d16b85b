#include "gvbps/bi_series.hpp"

#include <algorithm>

#include "gvbps/error.hpp"

namespace gvbps {

BiSeries::BiSeries(int order_q) {
  if (order_q < 0) throw Error(Errc::InvalidArgument, "order_q must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order_q) + 1);
  coeffs_[0] = LaurentPoly{{0, 1}};
}

BiSeries::BiSeries(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "BiSeries needs at least q^0");
}

BiSeries BiSeries::truncated(int order_q) const {
  if (order_q >= this->order_q()) return *this;
  return BiSeries(std::vector<LaurentPoly>(coeffs_.begin(), coeffs_.begin() + order_q + 1));
}

TruncSeries BiSeries::evaluate_at_z_one() const {
  std::vector<BigInt> c;
  c.reserve(coeffs_.size());
  for (const auto& p : coeffs_) c.push_back(p.evaluate_at_one());
  return TruncSeries(0, order_q(), std::move(c));
}

BiSeries BiSeries::sign_substituted() const {
  std::vector<LaurentPoly> c;
  c.reserve(coeffs_.size());
  for (const auto& p : coeffs_) c.push_back(p.sign_substituted());
  return BiSeries(std::move(c));
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  const int order = std::min(a.order_q(), b.order_q());
  std::vector<LaurentPoly> c(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      c[i + j] += a.coeff(i) * b.coeff(j);
    }
  }
  return BiSeries(std::move(c));
}

}  // namespace gvbps
