#pragma once

// Reference implementations used only by the tests. They deliberately take
// the slow, obvious route so that they share no code path with the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "gvbps/bi_series.hpp"
#include "gvbps/laurent_poly.hpp"
#include "gvbps/trunc_series.hpp"

namespace oracle {

using gvbps::BigInt;
using gvbps::LaurentPoly;
using gvbps::TruncSeries;

// Exponent at which a windowed series is known to start.
inline int start_of(const TruncSeries& s) {
  for (int e = s.min_exp(); e <= s.order(); ++e) {
    if (s.at(e) != 0) return e;
  }
  return s.order() + 1;
}

struct Product {
  int min_exp;
  int order;
  std::vector<BigInt> coeffs;  // coeffs[k - min_exp]
};

// Schoolbook double loop. A product coefficient at k is determined when no
// unknown coefficient of either factor can pair with a nonzero one.
inline Product naive_mul(const TruncSeries& a, const TruncSeries& b) {
  Product p;
  p.min_exp = a.min_exp() + b.min_exp();
  p.order = std::min(a.order() + start_of(b), b.order() + start_of(a));
  if (p.order < p.min_exp) return p;
  p.coeffs.assign(static_cast<std::size_t>(p.order - p.min_exp + 1), 0);
  for (int i = a.min_exp(); i <= a.order(); ++i) {
    for (int j = b.min_exp(); j <= b.order(); ++j) {
      if (i + j > p.order) break;
      p.coeffs[i + j - p.min_exp] += a.at(i) * b.at(j);
    }
  }
  return p;
}

// prod_{n=1}^{order} (1 - q^n)^{-e_pos}, one factor 1/(1 - q^n) at a time.
// Each division by (1 - q^n) is a running sum with stride n.
inline std::vector<BigInt> eta_inverse_power(int e_pos, int order) {
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= order; ++n) {
    for (int rep = 0; rep < e_pos; ++rep) {
      for (int k = n; k <= order; ++k) c[k] += c[k - n];
    }
  }
  return c;
}

// Bivariate truncated product of factors 1/(1 - s z^a q^n), repeated `mult`
// times, with s = +1 or -1. Dense grid over z in [-order, order].
class BiGrid {
 public:
  explicit BiGrid(int order) : order_(order), width_(2 * order + 1) {
    cells_.assign(static_cast<std::size_t>((order + 1) * width_), 0);
    at(0, 0) = 1;
  }

  BigInt& at(int h, int z) { return cells_[h * width_ + (z + order_)]; }

  // Multiply by 1/(1 - s z^a q^n): c[h][z] += s * c[h-n][z-a], ascending h.
  void divide_by(int a, int n, int s) {
    for (int h = n; h <= order_; ++h) {
      for (int z = -order_; z <= order_; ++z) {
        const int zz = z - a;
        if (zz < -order_ || zz > order_) continue;
        const BigInt prev = at(h - n, zz);
        if (prev != 0) at(h, z) += s * prev;
      }
    }
  }

  LaurentPoly row(int h) {
    LaurentPoly p;
    for (int z = -order_; z <= order_; ++z) {
      if (at(h, z) != 0) p.add_term(z, at(h, z));
    }
    return p;
  }

 private:
  int order_;
  int width_;
  std::vector<BigInt> cells_;
};

// 1 / prod_n [(1-q^n)^20 (1-z q^n)^2 (1-q^n/z)^2]
inline std::vector<LaurentPoly> kkv_rows(int order) {
  BiGrid grid(order);
  for (int n = 1; n <= order; ++n) {
    for (int rep = 0; rep < 20; ++rep) grid.divide_by(0, n, 1);
    for (int rep = 0; rep < 2; ++rep) grid.divide_by(1, n, 1);
    for (int rep = 0; rep < 2; ++rep) grid.divide_by(-1, n, 1);
  }
  std::vector<LaurentPoly> rows;
  for (int h = 0; h <= order; ++h) rows.push_back(grid.row(h));
  return rows;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }

  TruncSeries series(int min_lo, int min_hi, int max_len, int coeff_bound) {
    const int lo = uniform(min_lo, min_hi);
    const int len = uniform(0, max_len);
    std::vector<BigInt> c;
    for (int i = 0; i < len; ++i) c.push_back(uniform(-coeff_bound, coeff_bound));
    return TruncSeries(lo, lo + len - 1, std::move(c));
  }

  LaurentPoly poly(int exp_bound, int terms, int coeff_bound) {
    LaurentPoly p;
    const int n = uniform(0, terms);
    for (int i = 0; i < n; ++i) {
      p.add_term(uniform(-exp_bound, exp_bound), uniform(-coeff_bound, coeff_bound));
    }
    return p;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace oracle
