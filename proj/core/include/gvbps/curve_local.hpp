#pragma once

#include <cstdint>
#include <vector>

#include "gvbps/bigint.hpp"
#include "gvbps/bps_transform.hpp"
#include "gvbps/trunc_series.hpp"

namespace gvbps {

/// e(S^k M) for a space M of Euler characteristic e: the q^k coefficient of
/// (1 - q)^{-e}.
BigInt sym_euler(long long e, int k);

/// (2 - 2g) - e(C^0): Euler characteristic of the Milnor fibre term for a
/// curve of arithmetic genus g whose smooth locus has Euler characteristic
/// e_c0.
long long milnor_from_geometry(int g, long long e_c0);

struct CurveContribution {
  BpsVector bps;
  PairsSeries series;
};

/// A smooth genus-g curve with constant Behrend value chi contributes
/// n_g = (-1)^g chi and nothing else.
CurveContribution nonsingular_contribution(int g, const BigInt& chi, int order);

/// A curve of arithmetic genus g with r nodes. Subsets of the node set are
/// bitmasks over node indices 0..r-1; subset S labels the partial
/// normalization at S, of arithmetic genus g - |S|.
class NodalCurve {
 public:
  static constexpr int kMaxNodes = 24;

  /// chi[mask] is the Behrend value on the orbit pushed forward from the
  /// partial normalization at mask; chi.size() must be 2^r.
  NodalCurve(int g, int r, std::vector<BigInt> chi);
  /// Every subset carries the same value.
  static NodalCurve uniform(int g, int r, const BigInt& chi);

  int g() const noexcept { return g_; }
  int r() const noexcept { return r_; }
  const BigInt& chi(std::uint32_t subset) const { return chi_.at(subset); }
  const std::vector<BigInt>& chi_values() const noexcept { return chi_; }

  /// sum of chi_S over subsets with |S| = k, for k = 0..r.
  std::vector<BigInt> chi_by_subset_size() const;

 private:
  int g_;
  int r_;
  std::vector<BigInt> chi_;
};

/// n_h = (-1)^h sum_{S : g - |S| = h} chi_S, supported on [g - r, g].
BpsVector nodal_contribution(const NodalCurve& c);

/// P_n = (-1)^{n-1} sum_S chi_S e(S^{n-1+g_S} Sigma_{g_S}) on [1-g, order].
PairsSeries nodal_pairs_series(const NodalCurve& c, int order);

/// Local data of a curve singularity germ. q_euler holds e(Q_n) unsigned,
/// starting at q^0 with value 1.
struct SingularityGerm {
  int delta;
  long long mu;
  TruncSeries q_euler;

  /// Checks delta >= 0, q_euler.min_exp() == 0 and constant term 1.
  void validate() const;

  /// Ordinary node: delta 1, mu 0, e(Q_0) = 1 and e(Q_n) = n for n >= 1.
  static SingularityGerm node(int order);
  /// A smooth point: only Q_0.
  static SingularityGerm smooth(int order);
};

/// Solves sum_n (-1)^n e(Q_n) q^n = sum_{r=0}^{delta} n_r q^{delta-r}
/// (1+q)^{2r - 2 delta - mu}. The result has genus bound delta. Needs
/// q^0..q^{delta+1}.
BpsVector q_series_decompose(const SingularityGerm& germ);

/// Signed pairs series of a genus-g curve whose only singularity is `germ`:
///   [sum_k (-1)^k e(Q_k) q^k] q^{1-g} (1+q)^{-e_c0}.
/// Throws MilnorMismatch unless germ.mu == (2 - 2g) - e_c0.
PairsSeries stratify_pairs_series(const SingularityGerm& germ, long long e_c0, int g, int order);

/// sum_n e(Hilb^n C) q^n = [sum_k e(Q_k) q^k] (1-q)^{-e_c0} for the same
/// curve (pairs and Hilbert points agree on Gorenstein curves).
TruncSeries hilbert_series_from_germ(const SingularityGerm& germ, long long e_c0, int order);

}  // namespace gvbps
