#include "gvbps/curve_local.hpp"

#include <bit>
#include <limits>
#include <string>

#include "gvbps/detail/peel.hpp"
#include "gvbps/error.hpp"

namespace gvbps {

namespace {

int checked_int(long long value, const char* what) {
  if (value < std::numeric_limits<int>::min() / 4 || value > std::numeric_limits<int>::max() / 4) {
    throw Error(Errc::InvalidArgument, std::string(what) + " is out of range");
  }
  return static_cast<int>(value);
}

void require_order(int order, int lo) {
  if (order < lo) {
    throw Error(Errc::InvalidArgument, "order " + std::to_string(order) +
                                           " is below the lowest exponent " + std::to_string(lo));
  }
}

}  // namespace

BigInt sym_euler(long long e, int k) {
  if (k < 0) return 0;
  BigInt c = 1;
  for (int i = 0; i < k; ++i) {
    // c = C(e+i-1, i) here; multiplying by (e+i)/(i+1) stays integral.
    c *= static_cast<long>(e + i);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return c;
}

long long milnor_from_geometry(int g, long long e_c0) { return (2 - 2LL * g) - e_c0; }

CurveContribution nonsingular_contribution(int g, const BigInt& chi, int order) {
  if (g < 0) throw Error(Errc::InvalidArgument, "genus must be non-negative");
  require_order(order, 1 - g);

  BpsVector bps(g);
  bps[g] = chi * sign_pow(g);

  // Pairs supported on C at n = 1-g+i form S^i C with constant Behrend
  // value (-1)^{i-g} chi.
  std::vector<BigInt> p(static_cast<std::size_t>(order - (1 - g) + 1));
  for (int i = 0; 1 - g + i <= order; ++i) {
    p[i] = chi * sym_euler(2 - 2LL * g, i) * sign_pow(i - g);
  }
  return {std::move(bps), {TruncSeries(1 - g, order, std::move(p)), g}};
}

NodalCurve::NodalCurve(int g, int r, std::vector<BigInt> chi) : g_(g), r_(r), chi_(std::move(chi)) {
  if (g < 0 || r < 0) throw Error(Errc::InvalidArgument, "genus and node count must be non-negative");
  if (r > g) {
    throw Error(Errc::InvalidArgument, std::to_string(r) + " nodes exceed arithmetic genus " +
                                           std::to_string(g));
  }
  if (r > kMaxNodes) throw Error(Errc::InvalidArgument, "too many nodes");
  if (chi_.size() != (std::size_t{1} << r)) {
    throw Error(Errc::InvalidArgument, "chi must have one value per node subset (" +
                                           std::to_string(std::size_t{1} << r) + ")");
  }
}

NodalCurve NodalCurve::uniform(int g, int r, const BigInt& chi) {
  if (r < 0 || r > kMaxNodes) throw Error(Errc::InvalidArgument, "bad node count");
  return NodalCurve(g, r, std::vector<BigInt>(std::size_t{1} << r, chi));
}

std::vector<BigInt> NodalCurve::chi_by_subset_size() const {
  std::vector<BigInt> sums(static_cast<std::size_t>(r_) + 1);
  for (std::uint32_t mask = 0; mask < chi_.size(); ++mask) {
    sums[std::popcount(mask)] += chi_[mask];
  }
  return sums;
}

BpsVector nodal_contribution(const NodalCurve& c) {
  const auto sums = c.chi_by_subset_size();
  BpsVector out(c.g());
  for (int k = 0; k <= c.r(); ++k) {
    const int h = c.g() - k;
    out[h] = sums[k] * sign_pow(h);
  }
  return out;
}

PairsSeries nodal_pairs_series(const NodalCurve& c, int order) {
  const int g = c.g();
  require_order(order, 1 - g);
  const auto sums = c.chi_by_subset_size();

  std::vector<BigInt> p(static_cast<std::size_t>(order - (1 - g) + 1));
  for (int k = 0; k <= c.r(); ++k) {
    if (sums[k] == 0) continue;
    // Stratum S^{n-1+g_S}(normalization at S), g_S = g - k, whose smooth
    // model has Euler characteristic 2 - 2 g_S.
    const int gs = g - k;
    const int top = order - 1 + gs;
    if (top < 0) continue;
    const TruncSeries sym = binom_pow(-(2 - 2 * gs), Sign::Minus, top);
    for (int n = 1 - gs; n <= order; ++n) {
      mpz_addmul(p[n - (1 - g)].get_mpz_t(), sums[k].get_mpz_t(), sym.at(n - 1 + gs).get_mpz_t());
    }
  }
  for (int n = 1 - g; n <= order; ++n) {
    if (sign_pow(n - 1) < 0) p[n - (1 - g)] = -p[n - (1 - g)];
  }
  return {TruncSeries(1 - g, order, std::move(p)), g};
}

void SingularityGerm::validate() const {
  if (delta < 0) throw Error(Errc::InvalidArgument, "delta invariant must be non-negative");
  if (q_euler.min_exp() != 0) {
    throw Error(Errc::InvalidArgument, "germ Q-series must start at q^0");
  }
  if (q_euler.empty() || q_euler.at(0) != 1) {
    throw Error(Errc::InvalidArgument, "germ Q-series must have constant term 1");
  }
}

SingularityGerm SingularityGerm::node(int order) {
  if (order < 0) throw Error(Errc::InvalidArgument, "order must be non-negative");
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int n = 1; n <= order; ++n) c[n] = n;
  return {1, 0, TruncSeries(0, order, std::move(c))};
}

SingularityGerm SingularityGerm::smooth(int order) {
  if (order < 0) throw Error(Errc::InvalidArgument, "order must be non-negative");
  return {0, 0, TruncSeries::one(order)};
}

BpsVector q_series_decompose(const SingularityGerm& germ) {
  germ.validate();
  const int delta = germ.delta;
  const int mu = checked_int(germ.mu, "mu");
  if (germ.q_euler.order() < delta + 1) {
    throw Error(Errc::InsufficientWindow,
                "germ with delta " + std::to_string(delta) + " needs e(Q_n) through n = " +
                    std::to_string(delta + 1) + "; window ends at " +
                    std::to_string(germ.q_euler.order()));
  }
  auto peeled = detail::peel(q_negate(germ.q_euler), delta, [&](int r) {
    return detail::BinomialBasisElement{delta - r, 2 * r - 2 * delta - mu, Sign::Plus};
  });
  if (peeled.residual_exponent) {
    throw Error(Errc::NotBpsForm,
                "residual coefficient " + to_decimal(peeled.residual_value) + " at q^" +
                    std::to_string(*peeled.residual_exponent) + " in the germ Q-series",
                peeled.residual_exponent);
  }
  return BpsVector(delta, std::move(peeled.coeffs));
}

PairsSeries stratify_pairs_series(const SingularityGerm& germ, long long e_c0, int g, int order) {
  germ.validate();
  if (g < germ.delta) {
    throw Error(Errc::InvalidArgument, "arithmetic genus " + std::to_string(g) +
                                           " is below the germ's delta " +
                                           std::to_string(germ.delta));
  }
  const long long expected_mu = milnor_from_geometry(g, e_c0);
  if (germ.mu != expected_mu) {
    throw Error(Errc::MilnorMismatch, "germ mu = " + std::to_string(germ.mu) +
                                          " but (2 - 2g) - e(C^0) = " +
                                          std::to_string(expected_mu));
  }
  require_order(order, 1 - g);

  const TruncSeries signed_q = q_negate(germ.q_euler);
  const TruncSeries smooth_part =
      binom_pow(-checked_int(e_c0, "e(C^0)"), Sign::Plus, signed_q.order());
  return {(signed_q * smooth_part).shifted(1 - g).truncated(order), g};
}

TruncSeries hilbert_series_from_germ(const SingularityGerm& germ, long long e_c0, int order) {
  germ.validate();
  if (order < 0) throw Error(Errc::InvalidArgument, "order must be non-negative");
  const TruncSeries smooth_part =
      binom_pow(-checked_int(e_c0, "e(C^0)"), Sign::Minus, germ.q_euler.order());
  return (germ.q_euler * smooth_part).truncated(order);
}

}  // namespace gvbps
