#ifndef ATLAS_VERIFY_HPP
#define ATLAS_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "atlas/chart_index.hpp"
#include "atlas/core.hpp"
#include "atlas/levelset.hpp"
#include "atlas/polydisc.hpp"
#include "atlas/real_acharts.hpp"
#include "atlas/region.hpp"

namespace atlas {

struct CoverageReport {
  std::size_t samples_total = 0;
  std::size_t samples_covered = 0;
  std::vector<CPoint> uncovered;  // first 100 misses
  bool pass = true;

  double rate() const { return samples_total == 0 ? 1.0 : static_cast<double>(samples_covered) / samples_total; }
};

using PointLocator = std::function<bool(const CPoint&)>;

/// Runs `covered` over the points; the report keeps at most 100 misses.
CoverageReport check_coverage(const std::vector<CPoint>& points, const PointLocator& covered);

CoverageReport check_coverage(const AffineCovering& cov, const SampleRegion& region, std::size_t n_samples, std::uint64_t seed);
CoverageReport check_coverage(const PolydiscCovering& cov, const SampleRegion& region, std::size_t n_samples, std::uint64_t seed);
CoverageReport check_coverage(const LevelCovering& cov, const SampleRegion& region, std::size_t n_samples, std::uint64_t seed);

/// Coverage of the graph of data over {x in (eps,1)^m : data(x) < 1} by a-charts.
CoverageReport check_graph_coverage(const std::vector<RealAChart>& charts, const MonomialData& data, double eps,
                                    std::size_t n_samples, std::uint64_t seed);

/// Membership of graph points in level-set charts: base lookup, then branch agreement.
class LevelChartIndex {
 public:
  explicit LevelChartIndex(const LevelCovering& cov);
  std::optional<std::size_t> locate(const CPoint& p) const;

 private:
  const LevelCovering& cov_;
  std::unique_ptr<AffineCovering> base_;
  std::unique_ptr<ChartIndex> index_;
};

struct DoublingReport {
  std::vector<bool> per_chart;
  std::size_t failures = 0;
  double max_residual = 0.0;  // level sets: max |psi(x)^alpha - c| / |c|
  bool pass = true;
};

DoublingReport certify_doubling(const AffineCovering& cov);
DoublingReport certify_doubling(const PolydiscCovering& cov);
DoublingReport certify_doubling(const LevelCovering& cov, std::size_t samples_per_chart = 32, std::uint64_t seed = 0);

struct Chain {
  std::vector<std::size_t> chart_indices;
  std::vector<CPoint> witnesses;  // witnesses[i] lies in charts i and i+1

  std::size_t length() const { return chart_indices.size(); }
};

/// A point in both unit-scale chart images: exact search along the segment of
/// centres, then 1000 seeded samples of `a`.
std::optional<CPoint> intersection_witness(const AffineChart& a, const AffineChart& b, std::uint64_t seed = 0);

/// Shortest witnessed chain from p to q by breadth-first search, ties broken
/// by chart index.
Chain chain_between(const AffineCovering& cov, const CPoint& p, const CPoint& q);

struct BoundSpec {
  std::string name;
  std::map<std::string, double> params;
};

/// Named complexity bounds: "polydisc" {n, gamma, eta}, "whitney" {zeta, delta},
/// "suspension" {zeta, delta, kappa_base}, "levelset" {alpha1, n, gamma, eta},
/// "achart_count" {c3, eps, m}.
double evaluate_bound(const BoundSpec& bound);

struct ComplexityReport {
  std::size_t kappa = 0;
  double bound = 0.0;
  double ratio = 0.0;
};

ComplexityReport complexity_report(std::size_t kappa, const BoundSpec& bound);

template <typename C>
ComplexityReport complexity_report(const C& cov, const BoundSpec& bound) {
  return complexity_report(cov.kappa(), bound);
}

}  // namespace atlas

#endif  // ATLAS_VERIFY_HPP
