#pragma once

#include <span>

#include "gvbps/bi_series.hpp"
#include "gvbps/trunc_series.hpp"

namespace gvbps {

/// One factor family (1 - z^a q^n)^e, taken over every n >= 1.
struct ProductFactor {
  int z_exponent = 0;
  int power = 0;
};

/// prod_{n=1}^{order_q} prod_{(a,e)} (1 - z^a q^n)^e, exact through q^order_q.
/// Factors with n > order_q cannot reach q^order_q, so the truncation of
/// the infinite product is exact.
BiSeries product_family(std::span<const ProductFactor> factors, int order_q);

/// The same expansion for prod (1 + z^a q^n)^e.
BiSeries product_family_plus(std::span<const ProductFactor> factors, int order_q);

/// prod_{n>=1} (1 - q^n)^e through q^order, from the divisor-sum recurrence
///   n c_n = -e * sum_{k=1..n} sigma(k) c_{n-k}.
/// Independent of product_family; e = -24 is the Yau-Zaslow series.
TruncSeries eta_power(int e, int order);

}  // namespace gvbps
