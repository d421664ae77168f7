#ifndef ATLAS_POLYDISC_HPP
#define ATLAS_POLYDISC_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "atlas/annulus.hpp"
#include "atlas/core.hpp"

namespace atlas {

/// Constants of the two-sided comparison between |P| and the distance to {P = 0}.
struct EtaParams {
  double c_lower = 1.0;  // Lojasiewicz lower constant
  double c_unit = 1.0;   // bound C_y on |U| and 1/|U|
  int degree = 1;
  int alpha0 = 1;  // smallest exponent of the monomial

  void validate() const;
};

/// eta = (c_lower * delta^degree / c_unit)^(1/alpha0).
double eta_from_delta(double delta, const EtaParams& p);

/// Lower bound (|c| / c_unit)^(1/alpha0) on every coordinate of a point of {U x^alpha = c}.
double level_lower_bound(std::complex<double> c, double c_unit, int alpha0);

/// Per-level record of the inductive construction. Level l (zero-based here)
/// adds axis l; its charts carry factor gamma^(n-l).
struct PolydiscCoveringPlan {
  int n = 1;
  double eta = 1.0;
  double gamma = 2.0;
  std::vector<int> active_axes;
  std::vector<double> level_zeta;         // doubling factor of the axis-l disks
  std::vector<double> level_factor;       // doubling factor of the level-l covering
  std::vector<std::size_t> level_count;   // disks on axis l
  std::vector<std::size_t> level_kappa;   // charts of the level-l covering

  std::size_t kappa() const { return level_kappa.empty() ? 0 : level_kappa.back(); }
};

/// Count-only construction: the plan without any chart.
PolydiscCoveringPlan plan_punctured_polydisc(int n, double eta, double gamma, std::vector<int> active_axes = {});

/// Gamma-doubling covering of {eta <= |x_i| <= 1} in C^n minus the active
/// coordinate hyperplanes. Charts are generated on demand from the per-axis
/// disk layouts, in the order produced by repeated suspend_covering.
class PolydiscCovering {
 public:
  explicit PolydiscCovering(PolydiscCoveringPlan plan);

  const PolydiscCoveringPlan& plan() const { return plan_; }
  std::size_t kappa() const { return plan_.kappa(); }
  int dim() const { return plan_.n; }
  double gamma() const { return plan_.gamma; }
  AmbientSpec ambient() const { return PolydiscComplement{plan_.n, plan_.active_axes}; }

  AffineChart chart(std::size_t index) const;

  /// Disk of axis `axis` with per-axis index j.
  Disk axis_disk(int axis, std::size_t j) const;

  template <typename F>
  void for_each_chart(F&& f) const {
    for (std::size_t i = 0; i < kappa(); ++i) f(i, chart(i));
  }

  /// Index of a chart whose unit-scale image holds p, via per-axis nearest disks.
  std::optional<std::size_t> locate(const CPoint& p) const;

  AffineCovering materialize() const;

 private:
  bool active(int axis) const;

  PolydiscCoveringPlan plan_;
  std::vector<std::optional<AnnulusLocator>> axes_;
};

PolydiscCovering cover_punctured_polydisc(int n, double eta, double gamma, std::vector<int> active_axes = {});

}  // namespace atlas

#endif  // ATLAS_POLYDISC_HPP
