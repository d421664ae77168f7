#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "atlas/annulus.hpp"
#include "atlas/verify.hpp"

using namespace atlas;

namespace {

// Dense-grid oracle: do n disks of radius m/(2 zeta) centred on radius m cover
// one angular sector of the band [q, 1]? Disks sit at angles 0 and 2 pi/n.
bool grid_covers_band(double zeta, int n) {
  const double q = 1.0 - 1.0 / (4.0 * zeta);
  const double m = (1.0 + q) / 2.0;
  const double r = m / (2.0 * zeta);
  const std::complex<double> a0 = m, a1 = std::polar(m, 2.0 * std::numbers::pi / n);
  const int steps = 200;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; j <= steps; ++j) {
      const double rho = q + (1.0 - q) * i / steps;
      const double th = 2.0 * std::numbers::pi / n * j / steps;
      const std::complex<double> z = std::polar(rho, th);
      if (std::abs(z - a0) > r && std::abs(z - a1) > r) return false;
    }
  }
  return true;
}

std::size_t count_oracle(double delta, int n, double zeta) {
  const double q = 1.0 - 1.0 / (4.0 * zeta);
  std::size_t rings = 0;
  for (double rho = 1.0; rho > delta; rho *= q) ++rings;
  return rings * static_cast<std::size_t>(n);
}

}  // namespace

TEST(WhitneyParams, DisksPerRingIsMinimal) {
  struct Case {
    double zeta;
    int n;
  };
  for (const Case c : {Case{2.0, 14}, Case{4.0, 27}, Case{8.0 / std::sqrt(3.0), 31}, Case{8.0, 53}}) {
    const WhitneyDiskParams p = whitney_disk_params(c.zeta);
    EXPECT_EQ(p.disks_per_ring, c.n) << c.zeta;
    EXPECT_DOUBLE_EQ(p.ring_ratio, 1.0 - 1.0 / (4.0 * c.zeta));
    EXPECT_TRUE(grid_covers_band(c.zeta, c.n)) << c.zeta;
    EXPECT_FALSE(grid_covers_band(c.zeta, c.n - 1)) << c.zeta;
  }
}

TEST(WhitneyParams, RejectsSmallZeta) {
  EXPECT_THROW(whitney_disk_params(1.0), Error);
  EXPECT_THROW(annulus_layout(0.1, 0.5), Error);
  EXPECT_THROW(annulus_layout(0.0, 2.0), Error);
}

TEST(Annulus, CountsForZetaTwo) {
  const std::vector<std::pair<double, std::size_t>> frozen{{1e-1, 252}, {1e-2, 490}, {1e-3, 728}, {1e-4, 966}};
  for (const auto& [delta, kappa] : frozen) {
    EXPECT_EQ(cover_annulus(delta, 2.0).kappa(), kappa);
    EXPECT_EQ(count_oracle(delta, 14, 2.0), kappa);
  }
}

TEST(Annulus, EmptyWhenDeltaAtLeastOne) {
  EXPECT_EQ(cover_annulus(1.0, 2.0).kappa(), 0u);
  EXPECT_EQ(cover_annulus(3.0, 2.0).kappa(), 0u);
}

TEST(Annulus, EveryDiskIsWhitney) {
  for (double zeta : {2.0, 4.0, 8.0}) {
    for (double delta : {1e-1, 1e-3}) {
      for (const Disk& d : whitney_disks(annulus_layout(delta, zeta))) {
        EXPECT_LT(zeta * d.radius, std::abs(d.center));
      }
      EXPECT_TRUE(certify_doubling(cover_annulus(delta, zeta)).pass);
    }
  }
}

TEST(Annulus, CountBoundedByConstantTimesLog) {
  for (double zeta : {2.0, 3.0, 4.0, 8.0}) {
    const double a = annulus_constant(zeta);
    for (double delta : {0.9, 0.5, 1e-1, 1e-2, 1e-5, 1e-9}) {
      EXPECT_LE(static_cast<double>(cover_annulus(delta, zeta).kappa()), a * (std::log(1.0 / delta) + 1.0));
    }
  }
}

TEST(Annulus, CountGrowsLinearlyInLog) {
  std::vector<double> x, y;
  for (double delta : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
    x.push_back(std::log(1.0 / delta));
    y.push_back(static_cast<double>(cover_annulus(delta, 2.0).kappa()));
  }
  // differences per decade are 238 or 239 disks (17 rings of 14)
  for (std::size_t i = 1; i < y.size(); ++i) EXPECT_NEAR(y[i] - y[i - 1], 238.0, 14.0);
}

TEST(Annulus, CoversRegion) {
  for (double zeta : {2.0, 4.0}) {
    for (double delta : {1e-1, 1e-4}) {
      const CoverageReport r = check_coverage(cover_annulus(delta, zeta), AnnulusRegion{delta}, 20000, 11);
      EXPECT_TRUE(r.pass) << zeta << " " << delta;
      EXPECT_EQ(r.samples_total, 20000u);
    }
  }
}

namespace {

// Points of disk i inside the region that no other disk contains, on a grid.
std::size_t private_points(const AffineCovering& cov, std::size_t i, double delta, int steps) {
  const ChartIndex index(cov);
  const AffineChart& c = cov.charts[i];
  std::size_t count = 0;
  for (int a = -steps; a <= steps; ++a) {
    for (int b = -steps; b <= steps; ++b) {
      const std::complex<double> w(static_cast<double>(a) / steps, static_cast<double>(b) / steps);
      if (std::norm(w) > 1.0) continue;
      const CPoint p = c(CPoint::Constant(1, w));
      if (std::abs(p[0]) < delta || std::abs(p[0]) > 1.0) continue;
      const auto hits = index.containing(p);
      if (hits.size() == 1 && hits[0] == i) ++count;
    }
  }
  return count;
}

}  // namespace

TEST(Annulus, DisksOffTheInnermostRingHavePrivatePoints) {
  const double delta = 1e-1;
  const AffineCovering cov = cover_annulus(delta, 2.0);
  const std::size_t inner_ring_start = cov.kappa() - 14;
  for (std::size_t i : {std::size_t{0}, std::size_t{13}, std::size_t{14}, std::size_t{37}, std::size_t{100},
                        inner_ring_start - 1}) {
    EXPECT_GT(private_points(cov, i, delta, 300), 0u) << i;
  }
}

TEST(AnnulusLocator, NearestMatchesBruteForce) {
  const AnnulusLayout layout = annulus_layout(1e-3, 2.0);
  const AnnulusLocator loc(layout);
  const std::vector<Disk> disks = whitney_disks(layout);
  for (const CPoint& p : sample_region(AnnulusRegion{1e-3}, 3000, 5)) {
    double best = 1e300;
    for (const Disk& d : disks) best = std::min(best, std::abs(p[0] - d.center) / d.radius);
    const auto idx = loc.nearest(p[0]);
    ASSERT_TRUE(idx.has_value());
    EXPECT_NEAR(loc.normalized_distance(p[0], *idx), best, 1e-12);
  }
}
