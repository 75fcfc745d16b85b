#include "gvbps/bps_transform.hpp"

#include <algorithm>
#include <string>

#include "gvbps/detail/peel.hpp"
#include "gvbps/error.hpp"

namespace gvbps {

namespace {

using detail::BinomialBasisElement;

// r = 0 gives q (1+q)^{-2}, the infinite genus-0 element.
BinomialBasisElement pairs_element(int r) { return {1 - r, 2 * r - 2, Sign::Plus}; }

BinomialBasisElement hilbert_element(int g, int r) { return {g - r, 2 * r - 2, Sign::Minus}; }

void require_genus(int g) {
  if (g < 0) throw Error(Errc::InvalidArgument, "genus bound must be non-negative");
}

// Adds factor * element into a dense window starting at `lo`.
void accumulate(std::vector<BigInt>& acc, int lo, const BigInt& factor, const TruncSeries& element) {
  for (int e = element.min_exp(); e <= element.order(); ++e) {
    mpz_addmul(acc[e - lo].get_mpz_t(), factor.get_mpz_t(), element.at(e).get_mpz_t());
  }
}

[[noreturn]] void throw_residual(const detail::PeelResult& peeled, const char* basis) {
  throw Error(Errc::NotBpsForm,
              "residual coefficient " + to_decimal(peeled.residual_value) + " at q^" +
                  std::to_string(*peeled.residual_exponent) + " after peeling the " + basis +
                  " basis (checked through q^" + std::to_string(peeled.checked_order) + ")",
              peeled.residual_exponent);
}

}  // namespace

BpsVector::BpsVector(int g, std::vector<BigInt> n) : g_(g), n_(std::move(n)) {
  require_genus(g);
  if (n_.size() != static_cast<std::size_t>(g) + 1) {
    throw Error(Errc::InvalidArgument, "BPS vector of genus bound " + std::to_string(g) +
                                           " needs " + std::to_string(g + 1) + " entries, got " +
                                           std::to_string(n_.size()));
  }
}

BpsVector::BpsVector(int g) : BpsVector(g, std::vector<BigInt>(static_cast<std::size_t>(std::max(g, 0)) + 1)) {}

PairsSeries PairsSeries::with_inferred_genus(TruncSeries series) {
  const int g = std::max(0, 1 - series.min_exp());
  return {std::move(series), g};
}

TruncSeries bps_basis(int r, int order) {
  if (r < 0) throw Error(Errc::InvalidArgument, "basis genus must be non-negative");
  const auto element = pairs_element(r);
  if (order < element.shift) return TruncSeries(element.shift, element.shift - 1);
  return detail::expand_basis(element, order);
}

PairsSeries bps_recompose(const BpsVector& v, int order) {
  const int lo = 1 - v.g();
  if (order < lo) {
    throw Error(Errc::InvalidArgument, "order " + std::to_string(order) +
                                           " is below the lowest exponent 1 - g = " +
                                           std::to_string(lo));
  }
  std::vector<BigInt> acc(static_cast<std::size_t>(order - lo + 1));
  for (int r = 0; r <= v.g(); ++r) {
    if (v[r] == 0 || pairs_element(r).shift > order) continue;
    accumulate(acc, lo, v[r], detail::expand_basis(pairs_element(r), order));
  }
  return {TruncSeries(lo, order, std::move(acc)), v.g()};
}

BpsVector bps_decompose(const PairsSeries& z) {
  require_genus(z.g);
  if (z.series.order() < 1) {
    throw Error(Errc::InsufficientWindow,
                "decomposition of genus bound " + std::to_string(z.g) +
                    " needs coefficients through q^1; window ends at q^" +
                    std::to_string(z.series.order()));
  }
  auto peeled = detail::peel(z.series, z.g, pairs_element);
  if (peeled.residual_exponent) throw_residual(peeled, "pairs");
  return BpsVector(z.g, std::move(peeled.coeffs));
}

GgtcReport validate_ggtc(const PairsSeries& z) {
  require_genus(z.g);
  const TruncSeries& p = z.series;
  const int g = z.g;
  const int order = p.order();
  if (order < 1) {
    throw Error(Errc::InsufficientWindow, "identity check needs coefficients through q^1");
  }

  GgtcReport report;
  report.n_genus0 = detail::peel(p, g, pairs_element).coeffs[0];
  report.checked_order = order;
  const BigInt& big_n = report.n_genus0;

  auto expected = [&](int n) { return BigInt(big_n * n * sign_pow(n - 1)); };
  auto run = [](IdentityCheck& check, int lo, int hi, auto&& holds) {
    check.lo = lo;
    check.hi = hi;
    for (int n = lo; n <= hi; ++n) {
      if (!holds(n)) {
        check.pass = false;
        check.first_failure = n;
        return;
      }
    }
  };

  run(report.identity_0, p.min_exp(), std::min(-g, order),
      [&](int n) { return p.coeff(n) == 0; });
  run(report.identity_gg, 1, std::min(g - 1, order),
      [&](int n) { return p.coeff(n) - p.coeff(-n) == expected(n); });
  run(report.identity_g0, g, order, [&](int n) { return p.coeff(n) == expected(n); });

  report.pass = report.identity_0.pass && report.identity_gg.pass && report.identity_g0.pass;
  return report;
}

TruncSeries hilbert_basis(int g, int r, int order) {
  const auto element = hilbert_element(g, r);
  if (order < element.shift) return TruncSeries(element.shift, element.shift - 1);
  return detail::expand_basis(element, order);
}

TruncSeries hilbert_recompose(const BpsVector& v, int order) {
  if (order < 0) throw Error(Errc::InvalidArgument, "order must be non-negative");
  std::vector<BigInt> acc(static_cast<std::size_t>(order) + 1);
  for (int r = 0; r <= v.g(); ++r) {
    if (v[r] == 0 || hilbert_element(v.g(), r).shift > order) continue;
    accumulate(acc, 0, v[r], detail::expand_basis(hilbert_element(v.g(), r), order));
  }
  return TruncSeries(0, order, std::move(acc));
}

BpsVector hilbert_decompose(const TruncSeries& h, int g) {
  require_genus(g);
  if (h.min_exp() < 0) {
    throw Error(Errc::InvalidArgument, "Hilbert series must be a power series (min_exp >= 0)");
  }
  if (h.order() < g + 1) {
    throw Error(Errc::InsufficientWindow,
                "Hilbert decomposition of genus " + std::to_string(g) +
                    " needs coefficients through q^" + std::to_string(g + 1) +
                    "; window ends at q^" + std::to_string(h.order()));
  }
  auto peeled = detail::peel(h, g, [g](int r) { return hilbert_element(g, r); });
  if (peeled.residual_exponent) throw_residual(peeled, "Hilbert");
  return BpsVector(g, std::move(peeled.coeffs));
}

}  // namespace gvbps
