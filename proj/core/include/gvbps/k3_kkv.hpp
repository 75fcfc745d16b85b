#pragma once

#include <optional>
#include <vector>

#include "gvbps/bi_series.hpp"
#include "gvbps/bigint.hpp"
#include "gvbps/trunc_series.hpp"

namespace gvbps {

/// Euler characteristics e(P_n(S, h)) of stable pairs on a K3 surface in
/// an irreducible class with beta^2 = 2h - 2. data.coeff(h) is a
/// polynomial in y whose y^n coefficient is e(P_n(S, h)), kept for
/// n <= y_order.
struct K3PairsSeries {
  BiSeries data;
  int y_order;
};

/// Genus/class table r_{g,h}, 0 <= g <= h <= h_max.
class KkvTable {
 public:
  explicit KkvTable(int h_max);

  int h_max() const noexcept { return h_max_; }
  /// Zero for g > h.
  BigInt r(int g, int h) const;
  void set(int g, int h, BigInt value);
  /// Row g = 0 as a q-series.
  TruncSeries genus_zero_series() const;

 private:
  int h_max_;
  std::vector<std::vector<BigInt>> by_h_;  // by_h_[h][g]
};

/// (sqrt(y) - 1/sqrt(y))^{-2} prod_n [(1-q^n)^20 (1-y q^n)^2 (1-q^n/y)^2]^{-1},
/// with the prefactor expanded as y / (1-y)^2.
K3PairsSeries ky_series(int h_max, int y_order);

/// prod_n [(1-q^n)^20 (1-z q^n)^2 (1-q^n/z)^2]^{-1} through q^{h_max}.
BiSeries kkv_product(int h_max);

/// Writes each q^h coefficient as sum_{g=0}^{h} (-1)^g r_{g,h} (z - 2 + 1/z)^g,
/// peeling from the top z-degree. Throws AsymmetricInput if a coefficient
/// is not z <-> 1/z symmetric and NotKkvForm if a coefficient has z-support
/// outside [-h, h].
KkvTable kkv_decompose(const BiSeries& b);

/// prod_n (1 - q^n)^{-24} through q^{h_max}; coefficients are r_{0,h}.
TruncSeries yau_zaslow(int h_max);

struct SignedCheckReport {
  bool pass = true;
  struct Mismatch {
    int h;
    int n;
    BigInt expected;
    BigInt actual;
  };
  std::optional<Mismatch> first_mismatch;
  int h_max = 0;
  int y_order = 0;
};

/// Applies (-1)^{n+2h-1} to every e(P_n(S,h)) and compares, coefficient by
/// coefficient, with the independently expanded signed product
///   -(sqrt(-y) - 1/sqrt(-y))^{-2} prod_n [(1-q^n)^20 (1+y q^n)^2 (1+q^n/y)^2]^{-1}.
SignedCheckReport signed_conversion_check(const K3PairsSeries& ky);
SignedCheckReport signed_conversion_check(int h_max, int y_order);

}  // namespace gvbps
