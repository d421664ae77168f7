#include "atlas/polydisc.hpp"

#include <algorithm>
#include <cmath>

#include "atlas/suspension.hpp"

namespace atlas {

void EtaParams::validate() const {
  if (!(c_lower > 0.0) || !(c_unit >= 1.0) || degree < 1 || alpha0 < 1 || c_lower > c_unit)
    throw Error(Errc::InvalidArgument, "eta parameters need 0 < c_lower <= c_unit, c_unit >= 1, degree >= 1, alpha0 >= 1");
}

double eta_from_delta(double delta, const EtaParams& p) {
  p.validate();
  if (!(delta > 0.0)) throw Error(Errc::InvalidArgument, "delta must be positive");
  return std::pow(p.c_lower * std::pow(delta, p.degree) / p.c_unit, 1.0 / p.alpha0);
}

double level_lower_bound(std::complex<double> c, double c_unit, int alpha0) {
  if (c == std::complex<double>(0.0)) throw Error(Errc::NotARegularValue, "0 is the singular value of a monomial");
  if (!(c_unit >= 1.0) || alpha0 < 1) throw Error(Errc::InvalidArgument, "need c_unit >= 1 and alpha0 >= 1");
  return std::pow(std::abs(c) / c_unit, 1.0 / alpha0);
}

namespace {

std::vector<int> normalize_axes(int n, std::vector<int> axes) {
  if (axes.empty()) {
    axes.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) axes[static_cast<std::size_t>(i)] = i;
  }
  std::sort(axes.begin(), axes.end());
  axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
  for (int a : axes)
    if (a < 0 || a >= n) throw Error(Errc::InvalidArgument, "active axis out of range");
  return axes;
}

}  // namespace

PolydiscCoveringPlan plan_punctured_polydisc(int n, double eta, double gamma, std::vector<int> active_axes) {
  if (n < 1) throw Error(Errc::InvalidArgument, "dimension must be positive");
  if (!(gamma >= 2.0)) throw Error(Errc::GammaTooSmall, "the polydisc induction needs gamma >= 2");
  if (!(eta > 0.0)) throw Error(Errc::InvalidArgument, "eta must be positive");
  PolydiscCoveringPlan plan;
  plan.n = n;
  plan.eta = eta;
  plan.gamma = gamma;
  plan.active_axes = normalize_axes(n, std::move(active_axes));
  std::size_t kappa = 1;
  for (int l = 0; l < n; ++l) {
    const double factor = std::pow(gamma, n - l);
    const double zeta = l == 0 ? factor : suspension_annulus_zeta(factor * gamma, gamma);
    const bool is_active = std::binary_search(plan.active_axes.begin(), plan.active_axes.end(), l);
    const std::size_t count = is_active ? annulus_layout(eta, zeta).count() : 1;
    kappa *= count;
    plan.level_zeta.push_back(zeta);
    plan.level_factor.push_back(factor);
    plan.level_count.push_back(count);
    plan.level_kappa.push_back(kappa);
  }
  return plan;
}

PolydiscCovering::PolydiscCovering(PolydiscCoveringPlan plan) : plan_(std::move(plan)) {
  for (int l = 0; l < plan_.n; ++l) {
    if (active(l))
      axes_.emplace_back(AnnulusLocator(annulus_layout(plan_.eta, plan_.level_zeta[static_cast<std::size_t>(l)])));
    else
      axes_.emplace_back(std::nullopt);
  }
}

bool PolydiscCovering::active(int axis) const {
  return std::binary_search(plan_.active_axes.begin(), plan_.active_axes.end(), axis);
}

Disk PolydiscCovering::axis_disk(int axis, std::size_t j) const {
  const auto& loc = axes_[static_cast<std::size_t>(axis)];
  if (!loc) return {0.0, 1.0};
  return whitney_disk(loc->layout(), j);
}

AffineChart PolydiscCovering::chart(std::size_t index) const {
  if (index >= kappa()) throw Error(Errc::InvalidArgument, "chart index out of range");
  std::vector<std::size_t> j(static_cast<std::size_t>(plan_.n));
  for (int l = plan_.n - 1; l >= 1; --l) {
    const std::size_t inner = plan_.level_kappa[static_cast<std::size_t>(l - 1)];
    j[static_cast<std::size_t>(l)] = index / inner;
    index %= inner;
  }
  j[0] = index;
  const Disk first = axis_disk(0, j[0]);
  AffineChart chart(CPoint::Constant(1, first.center), CPoint::Constant(1, first.radius), plan_.level_factor[0]);
  for (int l = 1; l < plan_.n; ++l) {
    const Disk disk = axis_disk(l, j[static_cast<std::size_t>(l)]);
    chart = suspend_chart(chart, {suspension_layer_height(disk.radius, plan_.gamma), disk.center, plan_.gamma});
  }
  return chart;
}

std::optional<std::size_t> PolydiscCovering::locate(const CPoint& p) const {
  if (p.size() != plan_.n) throw Error(Errc::DimensionMismatch, "point dimension does not match the covering");
  if (kappa() == 0) return std::nullopt;
  std::size_t index = 0;
  for (int l = 0; l < plan_.n; ++l) {
    const auto& loc = axes_[static_cast<std::size_t>(l)];
    std::size_t j = 0;
    if (loc) {
      const auto nearest = loc->nearest(p[l]);
      if (!nearest) return std::nullopt;
      j = *nearest;
    }
    index += j * (l == 0 ? 1 : plan_.level_kappa[static_cast<std::size_t>(l - 1)]);
  }
  if (chart_contains(chart(index), p, 1.0)) return index;
  return std::nullopt;
}

AffineCovering PolydiscCovering::materialize() const {
  AffineCovering cov{ambient(), plan_.gamma, {}};
  cov.charts.reserve(kappa());
  for_each_chart([&](std::size_t, AffineChart c) { cov.charts.push_back(std::move(c)); });
  return cov;
}

PolydiscCovering cover_punctured_polydisc(int n, double eta, double gamma, std::vector<int> active_axes) {
  return PolydiscCovering(plan_punctured_polydisc(n, eta, gamma, std::move(active_axes)));
}

}  // namespace atlas
