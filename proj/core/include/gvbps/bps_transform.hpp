#pragma once

#include <optional>
#include <vector>

#include "gvbps/bigint.hpp"
#include "gvbps/trunc_series.hpp"

namespace gvbps {

/// BPS spectrum n_0..n_g of one curve class or one curve. Entries for
/// genera the class never realizes are simply zero.
class BpsVector {
 public:
  BpsVector(int g, std::vector<BigInt> n);
  /// Zero vector of genus bound g.
  explicit BpsVector(int g);

  int g() const noexcept { return g_; }
  const std::vector<BigInt>& n() const noexcept { return n_; }
  const BigInt& operator[](int r) const { return n_.at(static_cast<std::size_t>(r)); }
  BigInt& operator[](int r) { return n_.at(static_cast<std::size_t>(r)); }

  friend bool operator==(const BpsVector&, const BpsVector&) = default;

 private:
  int g_;
  std::vector<BigInt> n_;
};

/// Stable-pairs generating series Z(q) = sum_n P_n q^n together with its
/// declared genus bound. The vanishing P_n = 0 for n <= -g is not enforced
/// here; bps_decompose and validate_ggtc check it.
struct PairsSeries {
  TruncSeries series;
  int g;

  /// Convenience default g := max(0, 1 - min_exp).
  static PairsSeries with_inferred_genus(TruncSeries series);
};

/// q^{1-r} (1+q)^{2r-2} expanded on [1-r, order].
TruncSeries bps_basis(int r, int order);

/// sum_r n_r q^{1-r} (1+q)^{2r-2} through q^order. Requires order >= 1 - g.
PairsSeries bps_recompose(const BpsVector& v, int order);

/// Inverse of bps_recompose. Peels n_g, n_{g-1}, ..., n_0 from the lowest
/// exponent upward, then requires every remaining window coefficient to
/// vanish.
///
/// Throws InsufficientWindow when the window stops before q^1 and
/// NotBpsForm when a residual coefficient survives.
BpsVector bps_decompose(const PairsSeries& z);

struct IdentityCheck {
  bool pass = true;
  std::optional<int> first_failure;
  // Inclusive exponent range the identity was checked on; empty when lo > hi.
  int lo = 0;
  int hi = -1;
};

struct GgtcReport {
  bool pass = true;
  /// The genus-0 number n_0, used as N in the identities.
  BigInt n_genus0;
  /// P_n = (-1)^{n-1} n N for g <= n.
  IdentityCheck identity_g0;
  /// P_n - P_{-n} = (-1)^{n-1} n N for 0 < n < g.
  IdentityCheck identity_gg;
  /// P_n = 0 for n <= -g.
  IdentityCheck identity_0;
  int checked_order = 0;
};

/// Checks the three pairs identities on the full window of z. N is read
/// from the leading g+1 coefficients by the same peel as bps_decompose,
/// without requiring the residual to vanish; that is what the identities
/// test. Throws InsufficientWindow when q^1 is outside the window.
GgtcReport validate_ggtc(const PairsSeries& z);

/// q^{g-r} (1-q)^{2r-2} expanded on [g-r, order].
TruncSeries hilbert_basis(int g, int r, int order);

/// sum_r n_r q^{g-r} (1-q)^{2r-2} through q^order.
TruncSeries hilbert_recompose(const BpsVector& v, int order);

/// Writes a Hilbert-scheme Euler characteristic series
/// sum_i e(Hilb^i C) q^i in the basis q^{g-r} (1-q)^{2r-2}.
/// Needs q^0..q^{g+1} in the window and min_exp >= 0.
BpsVector hilbert_decompose(const TruncSeries& h, int g);

}  // namespace gvbps
