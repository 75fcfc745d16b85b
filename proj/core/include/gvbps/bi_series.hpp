#pragma once

#include <span>
#include <vector>

#include "gvbps/laurent_poly.hpp"
#include "gvbps/trunc_series.hpp"

namespace gvbps {

/// Power series in q, exact through q^order_q, whose coefficients are
/// Laurent polynomials in a second variable z.
class BiSeries {
 public:
  /// The constant series 1.
  explicit BiSeries(int order_q);
  explicit BiSeries(std::vector<LaurentPoly> coeffs);

  int order_q() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const LaurentPoly& coeff(int h) const { return coeffs_.at(static_cast<std::size_t>(h)); }
  std::span<const LaurentPoly> coeffs() const noexcept { return coeffs_; }

  BiSeries truncated(int order_q) const;
  /// z -> 1, giving a plain q-series.
  TruncSeries evaluate_at_z_one() const;
  /// z -> -z.
  BiSeries sign_substituted() const;

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  std::vector<LaurentPoly> coeffs_;
};

}  // namespace gvbps
