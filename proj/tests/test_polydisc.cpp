#include <gtest/gtest.h>

#include <cmath>

#include "atlas/annulus.hpp"
#include "atlas/polydisc.hpp"
#include "atlas/suspension.hpp"
#include "atlas/verify.hpp"

using namespace atlas;

TEST(Eta, FromDelta) {
  EXPECT_DOUBLE_EQ(eta_from_delta(0.1, {0.5, 2.0, 2, 2}), 0.05);
  EXPECT_DOUBLE_EQ(eta_from_delta(0.5, {1.0, 1.0, 1, 1}), 0.5);
  EXPECT_THROW(eta_from_delta(0.1, {0.0, 2.0, 2, 2}), Error);
  EXPECT_THROW(eta_from_delta(0.1, {3.0, 2.0, 2, 2}), Error);
}

TEST(Eta, MonotoneInDelta) {
  const EtaParams p{0.5, 2.0, 3, 2};
  double prev = 0.0;
  for (double d : {1e-4, 1e-3, 1e-2, 1e-1, 1.0}) {
    const double e = eta_from_delta(d, p);
    EXPECT_GT(e, prev);
    prev = e;
  }
}

TEST(Plan, RecurrenceIsExact) {
  for (double eta : {1e-1, 1e-2, 1e-3}) {
    const PolydiscCoveringPlan p = plan_punctured_polydisc(2, eta, 2.0);
    ASSERT_EQ(p.level_kappa.size(), 2u);
    EXPECT_EQ(p.level_kappa[0], p.level_count[0]);
    EXPECT_EQ(p.level_kappa[1], p.level_count[1] * p.level_kappa[0]);
    EXPECT_DOUBLE_EQ(p.level_zeta[0], 4.0);
    EXPECT_NEAR(p.level_zeta[1], 8.0 / std::sqrt(3.0), 1e-12);
    EXPECT_DOUBLE_EQ(p.level_factor[0], 4.0);
    EXPECT_DOUBLE_EQ(p.level_factor[1], 2.0);
    EXPECT_EQ(p.level_count[0], annulus_layout(eta, 4.0).count());
  }
  EXPECT_EQ(plan_punctured_polydisc(2, 0.1, 2.0).kappa(), 1265544u);
}

TEST(Plan, GammaTooSmall) {
  try {
    plan_punctured_polydisc(2, 0.1, 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::GammaTooSmall);
  }
}

TEST(Plan, InactiveAxesUseOneLayer) {
  const PolydiscCoveringPlan p = plan_punctured_polydisc(2, 0.1, 2.0, {0});
  EXPECT_EQ(p.level_count[1], 1u);
  EXPECT_EQ(p.kappa(), p.level_count[0]);
}

TEST(Plan, ThreeDimensionalCountOnly) {
  const PolydiscCoveringPlan p = plan_punctured_polydisc(3, 0.1, 2.0);
  EXPECT_EQ(p.level_kappa[2], p.level_count[2] * p.level_count[1] * p.level_count[0]);
  EXPECT_DOUBLE_EQ(p.level_factor[0], 8.0);
}

// The lazy covering reproduces repeated suspend_covering chart for chart.
TEST(PolydiscCovering, MatchesIteratedSuspension) {
  const double gamma = 2.0;
  {
    const double eta = 0.5;
    const PolydiscCovering lazy = cover_punctured_polydisc(2, eta, gamma);
    const AffineCovering iterated = suspend_covering(cover_annulus(eta, 4.0), eta, gamma);
    EXPECT_EQ(lazy.materialize(), iterated);
  }
  {
    const double eta = 0.97;
    const PolydiscCovering lazy = cover_punctured_polydisc(3, eta, gamma);
    AffineCovering iterated = cover_annulus(eta, 8.0);
    iterated = suspend_covering(iterated, eta, gamma);
    iterated = suspend_covering(iterated, eta, gamma);
    ASSERT_EQ(lazy.kappa(), iterated.kappa());
    EXPECT_EQ(lazy.materialize(), iterated);
  }
}

TEST(PolydiscCovering, LocateFindsContainingChart) {
  const PolydiscCovering cov = cover_punctured_polydisc(2, 1e-2, 2.0);
  for (const CPoint& p : sample_region(PolydiscRegion{2, 1e-2, {}}, 3000, 9)) {
    const auto idx = cov.locate(p);
    ASSERT_TRUE(idx.has_value());
    EXPECT_TRUE(chart_contains(cov.chart(*idx), p, 1.0));
  }
}

TEST(PolydiscCovering, LocateAgreesWithIndexOnSmallCovering) {
  const PolydiscCovering lazy = cover_punctured_polydisc(2, 0.3, 2.0);
  const AffineCovering full = lazy.materialize();
  const ChartIndex index(full);
  for (const CPoint& p : sample_region(PolydiscRegion{2, 0.3, {}}, 2000, 4)) {
    EXPECT_EQ(lazy.locate(p).has_value(), index.locate(p).has_value());
  }
}

TEST(PolydiscCovering, CoverageAndCertificate) {
  const PolydiscCovering cov = cover_punctured_polydisc(2, 1e-1, 2.0);
  EXPECT_TRUE(check_coverage(cov, PolydiscRegion{2, 1e-1, {}}, 10000, 1).pass);
  const DoublingReport r = certify_doubling(cov);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.per_chart.size(), cov.kappa());
}

TEST(PolydiscCovering, PartialActiveAxes) {
  const PolydiscCovering cov = cover_punctured_polydisc(2, 0.1, 2.0, {1});
  EXPECT_TRUE(check_coverage(cov, PolydiscRegion{2, 0.1, {1}}, 5000, 3).pass);
  EXPECT_TRUE(certify_doubling(cov).pass);
}
