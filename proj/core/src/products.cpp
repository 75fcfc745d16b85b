#include "gvbps/products.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "gvbps/error.hpp"

namespace gvbps {

namespace {

// Dense (q, z) grid: row h holds z-exponents in [-span*h, span*h] around
// a fixed centre column.
class Grid {
 public:
  Grid(int order_q, int z_span)
      : order_q_(order_q),
        z_span_(z_span),
        width_(2 * z_span * order_q + 1),
        cells_(static_cast<std::size_t>(order_q + 1) * static_cast<std::size_t>(width_)) {}

  BigInt& at(int h, int z) { return cells_[index(h, z)]; }
  const BigInt& at(int h, int z) const { return cells_[index(h, z)]; }
  int reach(int h) const { return z_span_ * h; }

  BiSeries to_bi_series() const {
    std::vector<LaurentPoly> rows(static_cast<std::size_t>(order_q_) + 1);
    for (int h = 0; h <= order_q_; ++h) {
      LaurentPoly::TermMap terms;
      for (int z = -reach(h); z <= reach(h); ++z) {
        if (at(h, z) != 0) terms.emplace(z, at(h, z));
      }
      rows[h] = LaurentPoly(std::move(terms));
    }
    return BiSeries(std::move(rows));
  }

 private:
  std::size_t index(int h, int z) const {
    return static_cast<std::size_t>(h) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(z + z_span_ * order_q_);
  }

  int order_q_;
  int z_span_;
  int width_;
  std::vector<BigInt> cells_;
};

// Coefficients of (1 - unit * x)^e up to x^kmax.
std::vector<BigInt> unit_binomial(int e, int unit, int kmax) {
  TruncSeries b = binom_pow(e, unit > 0 ? Sign::Minus : Sign::Plus, kmax);
  return {b.coeffs().begin(), b.coeffs().end()};
}

BiSeries expand(std::span<const ProductFactor> factors, int order_q, int unit) {
  if (order_q < 0) throw Error(Errc::InvalidArgument, "order_q must be non-negative");
  int z_span = 0;
  for (const auto& f : factors) z_span = std::max(z_span, std::abs(f.z_exponent));

  Grid grid(order_q, z_span);
  grid.at(0, 0) = 1;

  for (int n = 1; n <= order_q; ++n) {
    for (const auto& f : factors) {
      if (f.power == 0) continue;
      int kmax = order_q / n;
      if (f.power > 0) kmax = std::min(kmax, f.power);
      const std::vector<BigInt> b = unit_binomial(f.power, unit, kmax);
      // In place, highest q-degree first, so every source row is still the
      // pre-factor value when it is read.
      for (int h = order_q; h >= n; --h) {
        for (int k = 1; k <= kmax && k * n <= h; ++k) {
          if (b[k] == 0) continue;
          const int src = h - k * n;
          const int shift = k * f.z_exponent;
          for (int z = -grid.reach(src); z <= grid.reach(src); ++z) {
            const BigInt& s = grid.at(src, z);
            if (s == 0) continue;
            mpz_addmul(grid.at(h, z + shift).get_mpz_t(), b[k].get_mpz_t(), s.get_mpz_t());
          }
        }
      }
    }
  }
  return grid.to_bi_series();
}

}  // namespace

BiSeries product_family(std::span<const ProductFactor> factors, int order_q) {
  return expand(factors, order_q, +1);
}

BiSeries product_family_plus(std::span<const ProductFactor> factors, int order_q) {
  return expand(factors, order_q, -1);
}

TruncSeries eta_power(int e, int order) {
  if (order < 0) throw Error(Errc::InvalidArgument, "order must be non-negative");
  std::vector<BigInt> sigma(static_cast<std::size_t>(order) + 1);
  for (int d = 1; d <= order; ++d) {
    for (int m = d; m <= order; m += d) sigma[m] += d;
  }
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  BigInt acc;
  for (int n = 1; n <= order; ++n) {
    acc = 0;
    for (int k = 1; k <= n; ++k) {
      mpz_addmul(acc.get_mpz_t(), sigma[k].get_mpz_t(), c[n - k].get_mpz_t());
    }
    acc *= -e;
    mpz_divexact_ui(c[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return TruncSeries(0, order, std::move(c));
}

}  // namespace gvbps
