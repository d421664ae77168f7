#include "atlas/annulus.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace atlas {

namespace {

// Disks of one ring must cover the band corners with this relative slack.
constexpr double kRadiusSlack = 1e-6;

int minimal_disks_per_ring(double q, double zeta) {
  const double m = (1.0 + q) / 2.0;
  const double h = (1.0 - q) / 2.0;
  const double r = m / (2.0 * zeta) * (1.0 - kRadiusSlack);
  // Worst point of a band sector sits at angular offset pi/n on the inner or
  // outer band radius.
  auto covers = [&](int n) {
    const double c = std::cos(std::numbers::pi / n);
    for (double rho : {m - h, m + h})
      if (rho * rho + m * m - 2.0 * rho * m * c > r * r) return false;
    return true;
  };
  double worst = -1.0;
  for (double rho : {m - h, m + h}) worst = std::max(worst, (rho * rho + m * m - r * r) / (2.0 * rho * m));
  int n = std::max(3, static_cast<int>(std::ceil(std::numbers::pi / std::acos(std::min(1.0, worst)))) - 1);
  while (!covers(n)) ++n;
  return n;
}

}  // namespace

WhitneyDiskParams whitney_disk_params(double zeta) {
  if (!(zeta > 1.0) || !std::isfinite(zeta))
    throw Error(Errc::InvalidDoublingFactor, "annulus doubling factor must exceed 1");
  const double q = 1.0 - 1.0 / (4.0 * zeta);
  const int n = minimal_disks_per_ring(q, zeta);
  return {q, n / zeta, n};
}

AnnulusLayout annulus_layout(double delta, double zeta) {
  const WhitneyDiskParams p = whitney_disk_params(zeta);
  if (!(delta > 0.0)) throw Error(Errc::InvalidArgument, "annulus inner radius must be positive");
  AnnulusLayout layout{delta, zeta, p.ring_ratio, 0, p.disks_per_ring};
  if (delta >= 1.0) return layout;
  int k = 0;
  while (std::pow(p.ring_ratio, k) > delta) ++k;
  layout.rings = k;
  return layout;
}

Disk whitney_disk(const AnnulusLayout& layout, std::size_t index) {
  const auto n = static_cast<std::size_t>(layout.disks_per_ring);
  const int ring = static_cast<int>(index / n);
  const auto slot = static_cast<double>(index % n);
  const double outer = std::pow(layout.ring_ratio, ring);
  const double inner = std::pow(layout.ring_ratio, ring + 1);
  const double m = (outer + inner) / 2.0;
  // odd rings are staggered by half a step so every disk keeps a private region
  const double angle = (2.0 * slot + (ring % 2 == 1 ? 1.0 : 0.0)) * std::numbers::pi / static_cast<double>(n);
  return {std::polar(m, angle), m / (2.0 * layout.zeta)};
}

std::vector<Disk> whitney_disks(const AnnulusLayout& layout) {
  std::vector<Disk> out;
  out.reserve(layout.count());
  for (std::size_t i = 0; i < layout.count(); ++i) out.push_back(whitney_disk(layout, i));
  return out;
}

AffineCovering cover_annulus(double delta, double zeta) {
  const AnnulusLayout layout = annulus_layout(delta, zeta);
  AffineCovering cov{PuncturedPlane{}, zeta, {}};
  cov.charts.reserve(layout.count());
  for (std::size_t i = 0; i < layout.count(); ++i) {
    const Disk disk = whitney_disk(layout, i);
    cov.charts.emplace_back(CPoint::Constant(1, disk.center), CPoint::Constant(1, disk.radius), zeta);
  }
  return cov;
}

double annulus_constant(double zeta) {
  const WhitneyDiskParams p = whitney_disk_params(zeta);
  // rings <= log(1/delta)/log(1/q) + 1
  return p.disks_per_ring * std::max(1.0, 1.0 / -std::log(p.ring_ratio));
}

AnnulusLocator::AnnulusLocator(AnnulusLayout layout) : layout_(layout), log_q_(std::log(layout.ring_ratio)) {}

double AnnulusLocator::normalized_distance(std::complex<double> z, std::size_t index) const {
  const Disk d = whitney_disk(layout_, index);
  return std::abs(z - d.center) / d.radius;
}

std::optional<std::size_t> AnnulusLocator::nearest(std::complex<double> z) const {
  if (layout_.count() == 0) return std::nullopt;
  const int rings = layout_.rings;
  const int n = layout_.disks_per_ring;
  const double mod = std::abs(z);
  int ring = rings - 1;
  if (mod > 0.0) {
    const double k = std::floor(std::log(mod) / log_q_);
    ring = static_cast<int>(std::clamp(k, 0.0, static_cast<double>(rings - 1)));
  }
  const double step = 2.0 * std::numbers::pi / n;
  std::optional<std::size_t> best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (int k = std::max(0, ring - 1); k <= std::min(rings - 1, ring + 1); ++k) {
    const double offset = (k % 2 == 1) ? step / 2.0 : 0.0;
    const int centre = static_cast<int>(std::lround((std::arg(z) - offset) / step));
    for (int dj = -1; dj <= 1; ++dj) {
      const int slot = ((centre + dj) % n + n) % n;
      const std::size_t idx = static_cast<std::size_t>(k) * n + slot;
      const double dist = normalized_distance(z, idx);
      if (dist < best_dist) {
        best_dist = dist;
        best = idx;
      }
    }
  }
  return best;
}

}  // namespace atlas
