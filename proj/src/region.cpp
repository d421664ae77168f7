#include "atlas/region.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace atlas {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double halton(std::size_t index, int base) {
  double f = 1.0, r = 0.0;
  for (std::size_t i = index + 1; i > 0; i /= static_cast<std::size_t>(base)) {
    f /= base;
    r += f * static_cast<double>(i % static_cast<std::size_t>(base));
  }
  return r;
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

struct AxisSpec {
  bool punctured;
  double inner;
};

// Maps u, v in [0,1] to a point of the axis region.
std::complex<double> axis_point(const AxisSpec& a, double u, double v) {
  const double r = a.punctured ? std::exp(std::log(a.inner) * (1.0 - u)) : std::sqrt(u);
  return std::polar(std::clamp(r, a.punctured ? a.inner : 0.0, 1.0), kTwoPi * v);
}

std::vector<AxisSpec> axes_of(const PolydiscRegion& p) {
  std::vector<AxisSpec> axes(static_cast<std::size_t>(p.n), AxisSpec{p.active_axes.empty(), p.eta});
  for (int a : p.active_axes) {
    if (a < 0 || a >= p.n) throw Error(Errc::InvalidArgument, "active axis out of range");
    axes[static_cast<std::size_t>(a)].punctured = true;
  }
  return axes;
}

std::vector<CPoint> sample_axes(const std::vector<AxisSpec>& axes, std::size_t n_samples, std::uint64_t seed) {
  std::vector<CPoint> out;
  out.reserve(n_samples);
  const std::size_t dim = axes.size();
  const std::size_t grid_count = n_samples / 2;
  if (dim == 1) {
    // polar grid, endpoints of the radial range included
    const auto radial = std::max<std::size_t>(2, static_cast<std::size_t>(std::sqrt(grid_count / 8.0)));
    const std::size_t angular = std::max<std::size_t>(1, grid_count / radial);
    for (std::size_t i = 0; i < radial; ++i)
      for (std::size_t j = 0; j < angular; ++j)
        out.push_back(CPoint::Constant(1, axis_point(axes[0], static_cast<double>(i) / static_cast<double>(radial - 1),
                                                     static_cast<double>(j) / static_cast<double>(angular))));
  } else {
    if (2 * dim > std::size(kPrimes)) throw Error(Errc::InvalidArgument, "grid sampling supports up to 8 dimensions");
    for (std::size_t s = 0; s < grid_count; ++s) {
      CPoint p(static_cast<Eigen::Index>(dim));
      for (std::size_t a = 0; a < dim; ++a)
        p[static_cast<Eigen::Index>(a)] = axis_point(axes[a], halton(s, kPrimes[2 * a]), halton(s, kPrimes[2 * a + 1]));
      out.push_back(std::move(p));
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (out.size() < n_samples) {
    CPoint p(static_cast<Eigen::Index>(dim));
    for (std::size_t a = 0; a < dim; ++a) {
      const double u = unit(rng);
      p[static_cast<Eigen::Index>(a)] = axis_point(axes[a], u, unit(rng));
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

int region_dim(const SampleRegion& region) {
  if (std::holds_alternative<AnnulusRegion>(region)) return 1;
  if (const auto* p = std::get_if<PolydiscRegion>(&region)) return p->n;
  return static_cast<int>(std::get<LevelGraphRegion>(region).alpha.size());
}

std::vector<std::complex<double>> level_roots(const std::vector<int>& alpha, std::complex<double> c, const CPoint& xbar) {
  if (static_cast<Eigen::Index>(alpha.size()) != xbar.size() + 1) throw Error(Errc::DimensionMismatch, "exponent/point mismatch");
  std::complex<double> rest = 1.0;
  for (Eigen::Index i = 0; i < xbar.size(); ++i) rest *= std::pow(xbar[i], alpha[static_cast<std::size_t>(i + 1)]);
  const std::complex<double> w = c / rest;
  const int a1 = alpha[0];
  std::vector<std::complex<double>> roots;
  for (int k = 0; k < a1; ++k) roots.push_back(std::polar(std::pow(std::abs(w), 1.0 / a1), (std::arg(w) + kTwoPi * k) / a1));
  return roots;
}

std::vector<CPoint> sample_region(const SampleRegion& region, std::size_t n_samples, std::uint64_t seed) {
  if (const auto* a = std::get_if<AnnulusRegion>(&region)) {
    if (a->delta >= 1.0) return {};
    if (!(a->delta > 0.0)) throw Error(Errc::InvalidArgument, "annulus region needs delta > 0");
    return sample_axes({AxisSpec{true, a->delta}}, n_samples, seed);
  }
  if (const auto* p = std::get_if<PolydiscRegion>(&region)) {
    if (p->n < 1 || !(p->eta > 0.0)) throw Error(Errc::InvalidArgument, "polydisc region needs n >= 1 and eta > 0");
    if (p->eta >= 1.0) return {};
    return sample_axes(axes_of(*p), n_samples, seed);
  }
  const auto& g = std::get<LevelGraphRegion>(region);
  if (g.alpha.size() < 2 || !(g.eta > 0.0)) throw Error(Errc::InvalidArgument, "level graph region needs n >= 2 and eta > 0");
  if (g.eta >= 1.0) return {};
  const int base_dim = static_cast<int>(g.alpha.size()) - 1;
  std::vector<CPoint> out;
  for (const CPoint& xbar : sample_axes(axes_of(PolydiscRegion{base_dim, g.eta, {}}), n_samples, seed)) {
    for (std::complex<double> root : level_roots(g.alpha, g.c, xbar)) {
      CPoint p(base_dim + 1);
      p[0] = root;
      p.tail(base_dim) = xbar;
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace atlas
