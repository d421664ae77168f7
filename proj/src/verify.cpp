#include "atlas/verify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace atlas {

namespace {

constexpr std::size_t kMaxUncovered = 100;

void require_dims(const SampleRegion& region, int dim) {
  if (std::holds_alternative<LevelGraphRegion>(region))
    throw Error(Errc::RegionMismatch, "level graph regions need a level-set covering");
  if (region_dim(region) != dim)
    throw Error(Errc::RegionMismatch, "region dimension " + std::to_string(region_dim(region)) +
                                          " does not match covering dimension " + std::to_string(dim));
}

CPoint random_ball_point(std::mt19937_64& rng, Eigen::Index dim, double radius) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CPoint x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) x[i] = {gauss(rng), gauss(rng)};
  const double r = radius * std::pow(unit(rng), 1.0 / (2.0 * static_cast<double>(dim)));
  return x * (r / x.norm());
}

double halton(std::size_t index, int base) {
  double f = 1.0, r = 0.0;
  for (std::size_t i = index + 1; i > 0; i /= static_cast<std::size_t>(base)) {
    f /= base;
    r += f * static_cast<double>(i % static_cast<std::size_t>(base));
  }
  return r;
}

}  // namespace

CoverageReport check_coverage(const std::vector<CPoint>& points, const PointLocator& covered) {
  CoverageReport report;
  report.samples_total = points.size();
  for (const CPoint& p : points) {
    if (covered(p)) {
      ++report.samples_covered;
    } else if (report.uncovered.size() < kMaxUncovered) {
      report.uncovered.push_back(p);
    }
  }
  report.pass = report.samples_covered == report.samples_total;
  return report;
}

CoverageReport check_coverage(const AffineCovering& cov, const SampleRegion& region, std::size_t n_samples,
                              std::uint64_t seed) {
  require_dims(region, ambient_dim(cov.ambient));
  const ChartIndex index(cov);
  return check_coverage(sample_region(region, n_samples, seed),
                        [&](const CPoint& p) { return index.locate(p).has_value(); });
}

CoverageReport check_coverage(const PolydiscCovering& cov, const SampleRegion& region, std::size_t n_samples,
                              std::uint64_t seed) {
  require_dims(region, cov.dim());
  return check_coverage(sample_region(region, n_samples, seed),
                        [&](const CPoint& p) { return cov.locate(p).has_value(); });
}

CoverageReport check_coverage(const LevelCovering& cov, const SampleRegion& region, std::size_t n_samples,
                              std::uint64_t seed) {
  const auto* g = std::get_if<LevelGraphRegion>(&region);
  const auto& level = std::get<MonomialLevelSet>(cov.ambient);
  if (g == nullptr || g->alpha != level.alpha || g->c != level.c)
    throw Error(Errc::RegionMismatch, "level-set coverings are checked against their own level graph");
  const LevelChartIndex index(cov);
  return check_coverage(sample_region(region, n_samples, seed),
                        [&](const CPoint& p) { return index.locate(p).has_value(); });
}

LevelChartIndex::LevelChartIndex(const LevelCovering& cov)
    : cov_(cov), base_(std::make_unique<AffineCovering>(level_set_base(cov))), index_(std::make_unique<ChartIndex>(*base_)) {}

std::optional<std::size_t> LevelChartIndex::locate(const CPoint& p) const {
  const auto& level = std::get<MonomialLevelSet>(cov_.ambient);
  const auto branches = static_cast<std::size_t>(level.alpha[0]);
  if (p.size() != static_cast<Eigen::Index>(level.alpha.size()))
    throw Error(Errc::DimensionMismatch, "point dimension does not match the level set");
  const CPoint xbar = p.tail(p.size() - 1);
  const double tol = default_tolerance();
  for (std::size_t b : index_->containing(xbar)) {
    const CPoint x = base_->charts[b].preimage(xbar);
    for (std::size_t k = 0; k < branches; ++k) {
      const std::size_t idx = b * branches + k;
      if (std::abs(cov_.charts[idx].branch_value(x) - p[0]) <= tol * std::abs(p[0])) return idx;
    }
  }
  return std::nullopt;
}

CoverageReport check_graph_coverage(const std::vector<RealAChart>& charts, const MonomialData& data, double eps,
                                    std::size_t n_samples, std::uint64_t seed) {
  const int m = data.dim();
  if (!(eps > 0.0) || !(eps < 1.0) || m < 1) throw Error(Errc::InvalidArgument, "graph coverage needs eps in (0,1)");
  for (const RealAChart& c : charts)
    if (c.dim() != m) throw Error(Errc::RegionMismatch, "a-chart dimension does not match the monomial");
  const double log_eps = std::log(eps);
  auto to_point = [&](auto&& next_unit) {
    Eigen::VectorXd x(m);
    for (int i = 0; i < m; ++i) x[i] = std::exp(log_eps * (1.0 - next_unit(i)));
    return x;
  };
  std::vector<Eigen::VectorXd> xs;
  const std::size_t max_attempts = 200 * std::max<std::size_t>(n_samples, 1);
  std::size_t attempt = 0;
  for (; xs.size() < n_samples / 2 && attempt < max_attempts; ++attempt) {
    static constexpr int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    Eigen::VectorXd x = to_point([&](int i) { return halton(attempt, primes[i % 8]); });
    if (data(x) < 1.0) xs.push_back(std::move(x));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (attempt = 0; xs.size() < n_samples && attempt < max_attempts; ++attempt) {
    Eigen::VectorXd x = to_point([&](int) { return unit(rng); });
    if (data(x) < 1.0) xs.push_back(std::move(x));
  }
  const double tol = default_tolerance();
  std::vector<CPoint> points;
  points.reserve(xs.size());
  for (const Eigen::VectorXd& x : xs) points.push_back(x.cast<std::complex<double>>());
  // real boxes x(I^m), padded, to skip most preimage solves
  std::vector<Eigen::ArrayXd> lo, hi;
  for (const RealAChart& c : charts) {
    lo.push_back(c(Eigen::VectorXd::Constant(m, -1.0)).head(m).array() * (1.0 - 1e-9));
    hi.push_back(c(Eigen::VectorXd::Constant(m, 1.0)).head(m).array() * (1.0 + 1e-9));
  }
  return check_coverage(points, [&](const CPoint& p) {
    const Eigen::VectorXd x = p.real();
    const double value = data(x);
    for (std::size_t i = 0; i < charts.size(); ++i) {
      if ((x.array() < lo[i]).any() || (x.array() > hi[i]).any()) continue;
      const RealAChart& c = charts[i];
      if (auto w = c.preimage(x)) {
        if (std::abs(c(*w)[m] - value) <= tol * value) return true;
      }
    }
    return false;
  });
}

DoublingReport certify_doubling(const AffineCovering& cov) {
  DoublingReport report;
  report.per_chart.reserve(cov.kappa());
  for (const AffineChart& c : cov.charts) {
    const bool ok = c.gamma() == cov.gamma && avoidance_certificate(c, cov.ambient, cov.gamma);
    report.per_chart.push_back(ok);
    if (!ok) ++report.failures;
  }
  report.pass = report.failures == 0;
  return report;
}

DoublingReport certify_doubling(const PolydiscCovering& cov) {
  DoublingReport report;
  report.per_chart.reserve(cov.kappa());
  const AmbientSpec ambient = cov.ambient();
  cov.for_each_chart([&](std::size_t, const AffineChart& c) {
    const bool ok = c.gamma() == cov.gamma() && avoidance_certificate(c, ambient, cov.gamma());
    report.per_chart.push_back(ok);
    if (!ok) ++report.failures;
  });
  report.pass = report.failures == 0;
  return report;
}

DoublingReport certify_doubling(const LevelCovering& cov, std::size_t samples_per_chart, std::uint64_t seed) {
  DoublingReport report;
  const auto& level = std::get<MonomialLevelSet>(cov.ambient);
  const double tol = default_tolerance();
  std::mt19937_64 rng(seed);
  for (const MonomialLevelChart& chart : cov.charts) {
    bool ok = chart.gamma() == cov.gamma;
    try {
      for (std::size_t s = 0; s < samples_per_chart && ok; ++s) {
        const CPoint x = random_ball_point(rng, chart.base().dim(), 1.0);
        const double residual = std::abs(monomial(level.alpha, evaluate_level_chart(chart, x)) - level.c) / std::abs(level.c);
        report.max_residual = std::max(report.max_residual, residual);
        ok = residual <= tol;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::BranchUndefined) throw;
      ok = false;
    }
    report.per_chart.push_back(ok);
    if (!ok) ++report.failures;
  }
  report.pass = report.failures == 0;
  return report;
}

std::optional<CPoint> intersection_witness(const AffineChart& a, const AffineChart& b, std::uint64_t seed) {
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "charts of different dimension");
  const CPoint delta = b.translation() - a.translation();
  const double sa = delta.cwiseQuotient(a.scales()).squaredNorm();
  const double sb = delta.cwiseQuotient(b.scales()).squaredNorm();
  // |t delta / d_a| <= 1 and |(1-t) delta / d_b| <= 1 along the centre segment
  if (sa == 0.0) return a.translation();
  const double t_hi = std::min(1.0, 1.0 / std::sqrt(sa));
  const double t_lo = std::max(0.0, 1.0 - 1.0 / std::sqrt(sb));
  if (t_lo <= t_hi) {
    CPoint w = a.translation() + delta * ((t_lo + t_hi) / 2.0);
    if (chart_contains(a, w, 1.0) && chart_contains(b, w, 1.0)) return w;
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < 1000; ++s) {
    CPoint w = a(random_ball_point(rng, a.dim(), 1.0));
    if (chart_contains(b, w, 1.0)) return w;
  }
  return std::nullopt;
}

Chain chain_between(const AffineCovering& cov, const CPoint& p, const CPoint& q) {
  const ChartIndex index(cov);
  const std::vector<std::size_t> sources = index.containing(p);
  const std::vector<std::size_t> targets = index.containing(q);
  if (sources.empty()) throw Error(Errc::NoContainingChart, "start point is not covered");
  if (targets.empty()) throw Error(Errc::NoContainingChart, "end point is not covered");
  const std::unordered_set<std::size_t> target_set(targets.begin(), targets.end());
  for (std::size_t s : sources)
    if (target_set.count(s)) return Chain{{s}, {}};

  struct Visit {
    std::size_t parent;
    CPoint witness;
  };
  std::unordered_map<std::size_t, Visit> visited;
  std::deque<std::size_t> frontier;
  for (std::size_t s : sources) {
    visited.emplace(s, Visit{s, CPoint()});
    frontier.push_back(s);
  }
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop_front();
    for (std::size_t v : index.overlapping(u)) {
      if (visited.count(v)) continue;
      auto w = intersection_witness(cov.charts[u], cov.charts[v]);
      if (!w) continue;
      visited.emplace(v, Visit{u, std::move(*w)});
      if (target_set.count(v)) {
        Chain chain;
        for (std::size_t cur = v;; cur = visited.at(cur).parent) {
          chain.chart_indices.push_back(cur);
          const Visit& rec = visited.at(cur);
          if (rec.parent == cur) break;
          chain.witnesses.push_back(rec.witness);
        }
        std::reverse(chain.chart_indices.begin(), chain.chart_indices.end());
        std::reverse(chain.witnesses.begin(), chain.witnesses.end());
        return chain;
      }
      frontier.push_back(v);
    }
  }
  throw Error(Errc::Disconnected, "no chain joins the two points");
}

double evaluate_bound(const BoundSpec& bound) {
  auto get = [&](const char* key) {
    auto it = bound.params.find(key);
    if (it == bound.params.end())
      throw Error(Errc::InvalidArgument, "bound '" + bound.name + "' needs parameter '" + key + "'");
    return it->second;
  };
  auto polydisc = [](double n, double gamma, double eta) {
    const double g = 9.0 * std::pow(gamma, n);
    return std::pow(g, n) * std::pow(std::log(g / eta), n);
  };
  auto whitney = [](double zeta, double delta) { return 3.0 * zeta * std::log(3.0 * zeta / delta); };
  if (bound.name == "polydisc") return polydisc(get("n"), get("gamma"), get("eta"));
  if (bound.name == "whitney") return whitney(get("zeta"), get("delta"));
  if (bound.name == "suspension") return whitney(get("zeta"), get("delta")) * get("kappa_base");
  if (bound.name == "levelset") return get("alpha1") * polydisc(get("n") - 1.0, get("gamma"), get("eta"));
  if (bound.name == "achart_count") {
    const double m = get("m");
    const double per_axis_offsets = 2.0 * std::ceil(get("c3") / 2.0);
    const double boxes = std::max(0.0, std::ceil(std::log2(1.0 / (3.0 * get("eps"))))) + 2.0;
    return std::pow(per_axis_offsets * boxes, m);
  }
  throw Error(Errc::UnknownBound, "unknown bound '" + bound.name + "'");
}

ComplexityReport complexity_report(std::size_t kappa, const BoundSpec& bound) {
  ComplexityReport r;
  r.kappa = kappa;
  r.bound = evaluate_bound(bound);
  r.ratio = kappa == 0 ? 0.0 : static_cast<double>(kappa) / r.bound;
  return r;
}

}  // namespace atlas
