#include "gvbps/trunc_series.hpp"

#include <algorithm>
#include <string>

#include "gvbps/error.hpp"

namespace gvbps {

namespace {

std::size_t window_size(int min_exp, int order) {
  return order < min_exp ? 0 : static_cast<std::size_t>(order - min_exp + 1);
}

void require_window(int min_exp, int order, const char* what) {
  if (order < min_exp) {
    throw Error(Errc::EmptyWindow,
                std::string(what) + " determines no coefficient (window [" +
                    std::to_string(min_exp) + ", " + std::to_string(order) + "])");
  }
}

}  // namespace

TruncSeries::TruncSeries(int min_exp, int order)
    : min_exp_(min_exp), order_(order), coeffs_(window_size(min_exp, order)) {
  if (order < min_exp - 1) {
    throw Error(Errc::InvalidArgument, "series order " + std::to_string(order) +
                                           " lies below min_exp - 1");
  }
}

TruncSeries::TruncSeries(int min_exp, int order, std::vector<BigInt> coeffs)
    : TruncSeries(min_exp, order) {
  if (coeffs.size() > coeffs_.size()) {
    throw Error(Errc::InvalidArgument,
                std::to_string(coeffs.size()) + " coefficients do not fit window [" +
                    std::to_string(min_exp) + ", " + std::to_string(order) + "]");
  }
  std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

TruncSeries TruncSeries::from_poly(const LaurentPoly& p, int order) {
  int lo = p.is_zero() ? std::min(0, order + 1) : std::min(p.min_exponent(), order + 1);
  TruncSeries s(lo, order);
  for (const auto& [e, c] : p.terms()) {
    if (e <= order) s.coeffs_[e - lo] = c;
  }
  return s;
}

BigInt TruncSeries::coeff(int exponent) const {
  if (exponent < min_exp_) return 0;
  if (exponent > order_) {
    throw Error(Errc::InsufficientWindow,
                "coefficient of q^" + std::to_string(exponent) + " lies beyond order " +
                    std::to_string(order_),
                exponent);
  }
  return coeffs_[exponent - min_exp_];
}

std::optional<int> TruncSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return min_exp_ + static_cast<int>(i);
  }
  return std::nullopt;
}

int TruncSeries::known_valuation() const { return valuation().value_or(order_ + 1); }

TruncSeries TruncSeries::truncated(int new_order) const {
  if (new_order >= order_) return *this;
  TruncSeries out(min_exp_, std::max(new_order, min_exp_ - 1));
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

TruncSeries TruncSeries::shifted(int k) const {
  TruncSeries out = *this;
  out.min_exp_ += k;
  out.order_ += k;
  return out;
}

TruncSeries TruncSeries::scaled(const BigInt& factor) const {
  TruncSeries out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

TruncSeries TruncSeries::normalized() const {
  int v = known_valuation();
  if (v == min_exp_) return *this;
  TruncSeries out(v, order_);
  std::copy(coeffs_.begin() + (v - min_exp_), coeffs_.end(), out.coeffs_.begin());
  return out;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  int lo = std::min(a.min_exp(), b.min_exp());
  int hi = std::min(a.order(), b.order());
  require_window(lo, hi, "sum");
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) c[e - lo] = a.coeff(e) + b.coeff(e);
  return TruncSeries(lo, hi, std::move(c));
}

TruncSeries operator-(const TruncSeries& a) { return a.scaled(-1); }

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int va = a.known_valuation();
  const int vb = b.known_valuation();
  const int lo = a.min_exp() + b.min_exp();
  const int hi = std::min(a.order() + vb, b.order() + va);
  require_window(lo, hi, "product");

  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
  for (int n = std::max(lo, va + vb); n <= hi; ++n) {
    BigInt& acc = c[n - lo];
    const int i_lo = std::max(va, n - b.order());
    const int i_hi = std::min(a.order(), n - vb);
    for (int i = i_lo; i <= i_hi; ++i) {
      mpz_addmul(acc.get_mpz_t(), a.at(i).get_mpz_t(), b.at(n - i).get_mpz_t());
    }
  }
  return TruncSeries(lo, hi, std::move(c));
}

TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b, ArithOp op) {
  return op == ArithOp::Add ? a + b : a * b;
}

TruncSeries series_inverse(const TruncSeries& a, int order) {
  auto v = a.valuation();
  if (!v) {
    throw Error(Errc::NonUnitLeading, "series has no nonzero coefficient in its window");
  }
  const BigInt& lead = a.at(*v);
  if (lead != 1 && lead != -1) {
    throw Error(Errc::NonUnitLeading,
                "lowest coefficient " + to_decimal(lead) + " at q^" + std::to_string(*v) +
                    " is not a unit",
                *v);
  }
  const int lo = -*v;
  const int hi = std::min(order, a.order() - 2 * *v);
  require_window(lo, hi, "inverse");

  // a = q^v u with u_0 = +-1, and u^{-1} = b satisfies
  // b_k = -u_0 * sum_{j=1..k} u_j b_{k-j}.
  const int terms = hi - lo + 1;
  std::vector<BigInt> b(static_cast<std::size_t>(terms));
  b[0] = lead;
  BigInt acc;
  for (int k = 1; k < terms; ++k) {
    acc = 0;
    for (int j = 1; j <= k; ++j) {
      mpz_addmul(acc.get_mpz_t(), a.at(*v + j).get_mpz_t(), b[k - j].get_mpz_t());
    }
    b[k] = lead > 0 ? BigInt(-acc) : acc;
  }
  return TruncSeries(lo, hi, std::move(b));
}

TruncSeries binom_pow(int e, Sign sign, int order) {
  if (order < 0) {
    throw Error(Errc::InvalidArgument, "binom_pow order must be non-negative");
  }
  std::vector<BigInt> c(static_cast<std::size_t>(order + 1));
  c[0] = 1;
  for (int k = 1; k <= order; ++k) {
    // C(e, k) = C(e, k-1) * (e - k + 1) / k, exact at every step.
    c[k] = c[k - 1] * (e - k + 1);
    mpz_divexact_ui(c[k].get_mpz_t(), c[k].get_mpz_t(), static_cast<unsigned long>(k));
  }
  if (sign == Sign::Minus) {
    for (int k = 1; k <= order; k += 2) c[k] = -c[k];
  }
  return TruncSeries(0, order, std::move(c));
}

TruncSeries q_negate(const TruncSeries& a) {
  std::vector<BigInt> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sign_pow(a.min_exp() + static_cast<long long>(i)) < 0) c[i] = -c[i];
  }
  return TruncSeries(a.min_exp(), a.order(), std::move(c));
}

bool agree_on_common_window(const TruncSeries& a, const TruncSeries& b) {
  const int lo = std::min(a.min_exp(), b.min_exp());
  const int hi = std::min(a.order(), b.order());
  for (int e = lo; e <= hi; ++e) {
    if (a.coeff(e) != b.coeff(e)) return false;
  }
  return true;
}

}  // namespace gvbps
