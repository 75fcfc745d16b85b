#include <gtest/gtest.h>

#include "gvbps/bps_transform.hpp"
#include "gvbps/curve_local.hpp"
#include "gvbps/error.hpp"
#include "oracles.hpp"

using namespace gvbps;

namespace {

TruncSeries series(int lo, int hi, std::vector<BigInt> c) { return TruncSeries(lo, hi, std::move(c)); }

BpsVector vec(int g, std::vector<BigInt> n) { return BpsVector(g, std::move(n)); }

NodalCurve random_curve(oracle::Rng& rng) {
  const int g = rng.uniform(0, 8);
  const int r = rng.uniform(0, g);
  std::vector<BigInt> chi;
  for (int i = 0; i < (1 << r); ++i) chi.push_back(rng.uniform(-20, 20));
  return NodalCurve(g, r, std::move(chi));
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidArgument;
}

}  // namespace

// sym_euler ---------------------------------------------------------------

TEST(SymEuler, Examples) {
  EXPECT_EQ(sym_euler(2, 3), 4);
  EXPECT_EQ(sym_euler(0, 2), 0);
  EXPECT_EQ(sym_euler(-2, 2), 1);
  EXPECT_EQ(sym_euler(-2, 3), 0);
}

TEST(SymEuler, TorusAndSphere) {
  EXPECT_EQ(sym_euler(0, 0), 1);
  for (int k = 1; k <= 50; ++k) EXPECT_EQ(sym_euler(0, k), 0);
  for (int k = 0; k <= 50; ++k) EXPECT_EQ(sym_euler(2, k), k + 1);
}

TEST(SymEuler, MatchesBinomialSeries) {
  for (int e = -12; e <= 12; ++e) {
    const auto s = binom_pow(-e, Sign::Minus, 20);
    for (int k = 0; k <= 20; ++k) EXPECT_EQ(sym_euler(e, k), s.coeff(k)) << e << ' ' << k;
  }
}

// nonsingular_contribution ------------------------------------------------

TEST(Nonsingular, RationalCurve) {
  const auto c = nonsingular_contribution(0, 1, 5);
  EXPECT_EQ(c.bps, vec(0, {1}));
  EXPECT_EQ(c.series.series, series(1, 5, {1, -2, 3, -4, 5}));
}

TEST(Nonsingular, GenusTwo) {
  const auto c = nonsingular_contribution(2, 5, 4);
  EXPECT_EQ(c.bps, vec(2, {0, 0, 5}));
  EXPECT_EQ(c.series.series, series(-1, 4, {5, 10, 5}));
}

TEST(Nonsingular, GenusOneNegativeChi) {
  const auto c = nonsingular_contribution(1, -1, 4);
  EXPECT_EQ(c.bps, vec(1, {0, 1}));
  EXPECT_EQ(c.series.series, series(0, 4, {1}));
}

TEST(Nonsingular, SeriesAgreesWithRecompose) {
  for (int g = 0; g <= 10; ++g) {
    for (int chi : {-3, 1, 7}) {
      const auto c = nonsingular_contribution(g, chi, g + 8);
      EXPECT_EQ(c.series.series, bps_recompose(c.bps, g + 8).series) << g << ' ' << chi;
    }
  }
}

// nodal_contribution ------------------------------------------------------

TEST(Nodal, EllipticNodeWorkedExample) {
  for (int chi0 : {-4, 1, 3}) {
    for (int chi1 : {-2, 1, 9}) {
      const NodalCurve c(1, 1, {chi0, chi1});
      EXPECT_EQ(nodal_contribution(c), vec(1, {chi1, -chi0}));
    }
  }
}

TEST(Nodal, NoNodesIsNonsingular) {
  for (int g = 0; g <= 6; ++g) {
    const NodalCurve c(g, 0, {7});
    EXPECT_EQ(nodal_contribution(c), nonsingular_contribution(g, 7, g + 2).bps);
    EXPECT_EQ(nodal_pairs_series(c, g + 6).series, nonsingular_contribution(g, 7, g + 6).series.series);
  }
}

TEST(Nodal, TwoNodesAllOnes) {
  // Subset counts (1, 2, 1) by size; the sign follows the genus of each
  // partial normalization.
  EXPECT_EQ(nodal_contribution(NodalCurve::uniform(2, 2, 1)), vec(2, {1, -2, 1}));
}

TEST(Nodal, SubsetSums) {
  const NodalCurve c(3, 2, {1, 2, 3, 4});  // masks {}, {0}, {1}, {0,1}
  EXPECT_EQ(c.chi_by_subset_size(), (std::vector<BigInt>{1, 5, 4}));
  EXPECT_EQ(nodal_contribution(c), vec(3, {0, -4, 5, -1}));
}

TEST(Nodal, Invariants) {
  EXPECT_EQ(code_of([] { NodalCurve(1, 2, {1, 1, 1, 1}); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { NodalCurve(2, 2, {1, 1, 1}); }), Errc::InvalidArgument);
}

TEST(Nodal, GenusWindow) {
  oracle::Rng rng(1111);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = random_curve(rng);
    const auto v = nodal_contribution(c);
    for (int h = 0; h < c.g() - c.r(); ++h) ASSERT_EQ(v[h], 0) << "trial " << trial;
  }
}

TEST(Nodal, CrossPathEquality) {
  oracle::Rng rng(1212);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = random_curve(rng);
    const auto z = nodal_pairs_series(c, c.g() + 6);
    ASSERT_EQ(bps_decompose(z), nodal_contribution(c)) << "trial " << trial;
  }
}

// nodal_pairs_series ------------------------------------------------------

TEST(NodalSeries, EllipticNodeMatchesRecompose) {
  const auto c = NodalCurve::uniform(1, 1, 1);
  EXPECT_EQ(nodal_pairs_series(c, 10).series, bps_recompose(vec(1, {1, -1}), 10).series);
}

TEST(NodalSeries, SmoothTorusVanishes) {
  const auto z = nodal_pairs_series(NodalCurve(1, 0, {1}), 10);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(z.series.coeff(n), 0);
}

TEST(NodalSeries, OnlyNormalizedStratum) {
  const auto z = nodal_pairs_series(NodalCurve(2, 1, {0, 1}), 8);
  const auto smooth = nonsingular_contribution(1, 1, 8).series.series;
  EXPECT_EQ(z.series.coeff(-1), 0);
  EXPECT_TRUE(agree_on_common_window(z.series, smooth));
  EXPECT_EQ(z.series.order(), smooth.order());
}

TEST(NodalSeries, FrozenValues) {
  const auto z = nodal_pairs_series(NodalCurve::uniform(2, 2, 1), 8);
  EXPECT_EQ(z.series, series(-1, 8, {1, 0, 2, -2, 3, -4, 5, -6, 7, -8}));
}

// q_series_decompose ------------------------------------------------------

TEST(QSeries, Node) {
  EXPECT_EQ(q_series_decompose(SingularityGerm::node(10)), vec(1, {-1, 1}));
}

TEST(QSeries, SmoothPoint) {
  EXPECT_EQ(q_series_decompose(SingularityGerm::smooth(5)), vec(0, {1}));
}

TEST(QSeries, ShortWindow) {
  EXPECT_EQ(code_of([] { (void)q_series_decompose(SingularityGerm::node(1)); }),
            Errc::InsufficientWindow);
}

TEST(QSeries, ResidualIsRejected) {
  SingularityGerm germ{1, 0, series(0, 5, {1, 1, 2, 3, 4, 6})};
  EXPECT_EQ(code_of([&] { (void)q_series_decompose(germ); }), Errc::NotBpsForm);
}

TEST(QSeries, GermValidation) {
  SingularityGerm bad{1, 0, series(0, 5, {2, 1})};
  EXPECT_EQ(code_of([&] { (void)q_series_decompose(bad); }), Errc::InvalidArgument);
}

// stratify_pairs_series ---------------------------------------------------

TEST(Stratify, NodalEllipticMatchesNodalSeries) {
  const auto s = stratify_pairs_series(SingularityGerm::node(12), 0, 1, 10);
  EXPECT_EQ(bps_decompose(s), vec(1, {-1, 1}));
  for (int chi : {1, 3, -2}) {
    const auto nodal = nodal_pairs_series(NodalCurve::uniform(1, 1, chi), 10);
    EXPECT_EQ(nodal.series, s.series.scaled(-chi));
  }
}

TEST(Stratify, SmoothGermGivesNonsingularSeries) {
  for (int g = 0; g <= 5; ++g) {
    const auto s = stratify_pairs_series(SingularityGerm::smooth(12), 2 - 2 * g, g, 8);
    BpsVector v(g);
    v[g] = 1;
    EXPECT_EQ(s.series, bps_recompose(v, 8).series) << "g=" << g;
  }
}

TEST(Stratify, MilnorMismatch) {
  EXPECT_EQ(code_of([] { (void)stratify_pairs_series(SingularityGerm::node(8), 1, 1, 6); }),
            Errc::MilnorMismatch);
}

TEST(Stratify, NodeShiftedByGeometricGenus) {
  const auto germ_vec = q_series_decompose(SingularityGerm::node(16));
  for (int g = 1; g <= 3; ++g) {
    const auto s = stratify_pairs_series(SingularityGerm::node(16), 2 - 2 * g, g, 10);
    const auto v = bps_decompose(s);
    const int geometric = g - 1;
    for (int r = 0; r <= g; ++r) {
      const BigInt expected = r >= geometric ? germ_vec[r - geometric] : BigInt(0);
      EXPECT_EQ(v[r], expected) << "g=" << g << " r=" << r;
    }
  }
}

TEST(Stratify, MatchesNodalSeriesWithUniformChi) {
  // One node on a genus-g curve: both routes agree up to (-1)^g chi.
  for (int g = 1; g <= 5; ++g) {
    const auto s = stratify_pairs_series(SingularityGerm::node(16), 2 - 2 * g, g, 9);
    const auto nodal = nodal_pairs_series(NodalCurve::uniform(g, 1, 2), 9);
    EXPECT_EQ(nodal.series, s.series.scaled(2 * sign_pow(g))) << "g=" << g;
  }
}

// milnor_from_geometry ----------------------------------------------------

TEST(Milnor, Examples) {
  EXPECT_EQ(milnor_from_geometry(1, 0), 0);
  EXPECT_EQ(milnor_from_geometry(0, 2), 0);
  EXPECT_EQ(milnor_from_geometry(1, 1), -1);
}

// Hilbert series of a germ ------------------------------------------------

TEST(GermHilbert, NodalEllipticDecomposesToOnes) {
  const auto h = hilbert_series_from_germ(SingularityGerm::node(20), 0, 20);
  std::vector<BigInt> expected{1};
  for (int n = 1; n <= 20; ++n) expected.push_back(n);
  EXPECT_EQ(h, series(0, 20, expected));
  EXPECT_EQ(hilbert_decompose(h, 1), vec(1, {1, 1}));
}
