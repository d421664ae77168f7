#ifndef ATLAS_REGION_HPP
#define ATLAS_REGION_HPP

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

#include "atlas/core.hpp"

namespace atlas {

/// Closed annulus {delta <= |z| <= 1}.
struct AnnulusRegion {
  double delta = 1.0;
  bool operator==(const AnnulusRegion&) const = default;
};

/// {eta <= |x_i| <= 1 on active axes, |x_i| <= 1 elsewhere}; zero-based axes,
/// empty means all.
struct PolydiscRegion {
  int n = 1;
  double eta = 1.0;
  std::vector<int> active_axes;
  bool operator==(const PolydiscRegion&) const = default;
};

/// Every branch of {x^alpha = c} over the polydisc region of the last n-1 coordinates.
struct LevelGraphRegion {
  std::vector<int> alpha;
  std::complex<double> c;
  double eta = 1.0;
  bool operator==(const LevelGraphRegion&) const = default;
};

using SampleRegion = std::variant<AnnulusRegion, PolydiscRegion, LevelGraphRegion>;

int region_dim(const SampleRegion& region);

/// Deterministic points of the region: a grid (polar in one dimension, Halton
/// in log-radius/angle otherwise) for the first half, seeded random points for
/// the rest. Radii on punctured axes are log-uniform. For level graphs every
/// base sample contributes all alpha_1 branch points.
std::vector<CPoint> sample_region(const SampleRegion& region, std::size_t n_samples, std::uint64_t seed);

/// All alpha_1 roots x_1 of x_1^alpha_1 * xbar^alphabar = c by direct extraction.
std::vector<std::complex<double>> level_roots(const std::vector<int>& alpha, std::complex<double> c, const CPoint& xbar);

}  // namespace atlas

#endif  // ATLAS_REGION_HPP
