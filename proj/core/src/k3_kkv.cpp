#include "gvbps/k3_kkv.hpp"

#include <array>
#include <string>

#include "gvbps/error.hpp"
#include "gvbps/products.hpp"

namespace gvbps {

namespace {

constexpr std::array<ProductFactor, 3> kK3Factors{{{0, -20}, {1, -2}, {-1, -2}}};
constexpr std::array<ProductFactor, 1> kPureQ{{{0, -20}}};
constexpr std::array<ProductFactor, 2> kYFactors{{{1, -2}, {-1, -2}}};

void require_h_max(int h_max) {
  if (h_max < 0) throw Error(Errc::InvalidArgument, "h_max must be non-negative");
}

void require_y_order(int y_order) {
  if (y_order < 1) throw Error(Errc::InvalidArgument, "y_order must be at least 1");
}

// Coefficient of y^n in poly(y) * prefactor(y), where prefactor is a power
// series starting at y^1 known through y^{prefactor.order()}.
BigInt product_coeff(const LaurentPoly& poly, const TruncSeries& prefactor, int n) {
  BigInt sum = 0;
  for (const auto& [j, c] : poly.terms()) {
    const int k = n - j;
    if (k < prefactor.min_exp()) continue;
    mpz_addmul(sum.get_mpz_t(), c.get_mpz_t(), prefactor.coeff(k).get_mpz_t());
  }
  return sum;
}

}  // namespace

KkvTable::KkvTable(int h_max) : h_max_(h_max) {
  require_h_max(h_max);
  by_h_.resize(static_cast<std::size_t>(h_max) + 1);
  for (int h = 0; h <= h_max; ++h) by_h_[h].resize(static_cast<std::size_t>(h) + 1);
}

BigInt KkvTable::r(int g, int h) const {
  if (h < 0 || h > h_max_ || g < 0) {
    throw Error(Errc::InvalidArgument, "r_{g,h} index out of range");
  }
  return g > h ? BigInt(0) : by_h_[h][g];
}

void KkvTable::set(int g, int h, BigInt value) {
  if (h < 0 || h > h_max_ || g < 0 || g > h) {
    throw Error(Errc::InvalidArgument, "r_{g,h} is only stored for 0 <= g <= h <= h_max");
  }
  by_h_[h][g] = std::move(value);
}

TruncSeries KkvTable::genus_zero_series() const {
  std::vector<BigInt> c;
  c.reserve(by_h_.size());
  for (const auto& row : by_h_) c.push_back(row[0]);
  return TruncSeries(0, h_max_, std::move(c));
}

BiSeries kkv_product(int h_max) {
  require_h_max(h_max);
  return product_family(kK3Factors, h_max);
}

K3PairsSeries ky_series(int h_max, int y_order) {
  require_h_max(h_max);
  require_y_order(y_order);
  const BiSeries product = kkv_product(h_max);

  // y / (1 - y)^2 = sum_{k>=1} k y^k, needed through y^{y_order + h_max}.
  const int reach = y_order + h_max;
  std::vector<BigInt> k_coeffs(static_cast<std::size_t>(reach));
  for (int k = 1; k <= reach; ++k) k_coeffs[k - 1] = k;
  const TruncSeries prefactor(1, reach, std::move(k_coeffs));

  std::vector<LaurentPoly> rows(static_cast<std::size_t>(h_max) + 1);
  for (int h = 0; h <= h_max; ++h) {
    LaurentPoly::TermMap terms;
    for (int n = 1 - h; n <= y_order; ++n) {
      BigInt c = product_coeff(product.coeff(h), prefactor, n);
      if (c != 0) terms.emplace(n, std::move(c));
    }
    rows[h] = LaurentPoly(std::move(terms));
  }
  return {BiSeries(std::move(rows)), y_order};
}

KkvTable kkv_decompose(const BiSeries& b) {
  const int h_max = b.order_q();
  KkvTable table(h_max);

  // powers[g] = (z - 2 + 1/z)^g
  const LaurentPoly step{{-1, 1}, {0, -2}, {1, 1}};
  std::vector<LaurentPoly> powers{LaurentPoly{{0, 1}}};
  for (int g = 1; g <= h_max; ++g) powers.push_back(powers.back() * step);

  for (int h = 0; h <= h_max; ++h) {
    const LaurentPoly& coeff = b.coeff(h);
    if (!involution_check(coeff)) {
      throw Error(Errc::AsymmetricInput,
                  "q^" + std::to_string(h) + " coefficient is not symmetric under z <-> 1/z", h);
    }
    if (!coeff.is_zero() && coeff.max_exponent() > h) {
      throw Error(Errc::NotKkvForm,
                  "q^" + std::to_string(h) + " coefficient reaches z^" +
                      std::to_string(coeff.max_exponent()) + ", beyond genus bound " +
                      std::to_string(h),
                  h);
    }
    LaurentPoly residual = coeff;
    for (int g = h; g >= 0; --g) {
      const BigInt top = residual.coeff(g);
      table.set(g, h, top * sign_pow(g));
      if (top != 0) residual -= powers[g] * top;
    }
    if (!residual.is_zero()) {
      throw Error(Errc::NotKkvForm,
                  "nonzero residual in the q^" + std::to_string(h) + " coefficient", h);
    }
  }
  return table;
}

TruncSeries yau_zaslow(int h_max) {
  require_h_max(h_max);
  return eta_power(-24, h_max);
}

SignedCheckReport signed_conversion_check(const K3PairsSeries& ky) {
  const int h_max = ky.data.order_q();
  const int y_order = ky.y_order;
  require_y_order(y_order);

  SignedCheckReport report;
  report.h_max = h_max;
  report.y_order = y_order;

  // Right-hand side, built from scratch: w / (1 - w)^2 in w = -y, negated,
  // times the product with the y-dependent factors flipped to (1 + y^{+-1} q^n).
  const int reach = y_order + h_max;
  const TruncSeries w_prefactor =
      series_inverse(binom_pow(2, Sign::Minus, reach), reach - 1).shifted(1);
  const TruncSeries prefactor = -q_negate(w_prefactor);
  const BiSeries product = product_family(kPureQ, h_max) * product_family_plus(kYFactors, h_max);

  for (int h = 0; h <= h_max; ++h) {
    const LaurentPoly& lhs_poly = ky.data.coeff(h);
    int lo = 1 - h;
    if (!lhs_poly.is_zero()) lo = std::min(lo, lhs_poly.min_exponent());
    for (int n = lo; n <= y_order; ++n) {
      const BigInt actual = lhs_poly.coeff(n) * sign_pow(n + 2LL * h - 1);
      const BigInt expected = product_coeff(product.coeff(h), prefactor, n);
      if (actual != expected) {
        report.pass = false;
        report.first_mismatch = SignedCheckReport::Mismatch{h, n, expected, actual};
        return report;
      }
    }
  }
  return report;
}

SignedCheckReport signed_conversion_check(int h_max, int y_order) {
  return signed_conversion_check(ky_series(h_max, y_order));
}

}  // namespace gvbps
