#ifndef ATLAS_CORE_HPP
#define ATLAS_CORE_HPP

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <variant>
#include <vector>

#include "atlas/error.hpp"

namespace atlas {

template <typename Scalar>
using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// A point of C^n.
using CPoint = CVector<double>;

/// Relative tolerance for equality-flavored checks. ATLAS_TOL overrides 1e-10.
inline double default_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("ATLAS_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end != env && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-10;
  }();
  return tol;
}

/// Chart x -> b + D x on the Euclidean unit ball of C^n, D diagonal, with the
/// same formula serving as the extension to the ball of radius gamma.
template <typename Scalar>
class DiagonalAffineChart {
 public:
  using Vector = CVector<Scalar>;

  DiagonalAffineChart(Vector translation, Vector scales, Scalar gamma)
      : b_(std::move(translation)), d_(std::move(scales)), gamma_(gamma) {
    if (b_.size() < 1 || b_.size() != d_.size())
      throw Error(Errc::DimensionMismatch, "chart translation and scales must share a positive dimension");
    if (!(gamma_ > Scalar(1)))
      throw Error(Errc::InvalidDoublingFactor, "chart doubling factor must exceed 1");
    for (Eigen::Index i = 0; i < d_.size(); ++i)
      if (d_[i] == std::complex<Scalar>(0)) throw Error(Errc::InvalidArgument, "chart scales must be nonzero");
  }

  Eigen::Index dim() const { return b_.size(); }
  const Vector& translation() const { return b_; }
  const Vector& scales() const { return d_; }
  Scalar gamma() const { return gamma_; }

  /// Evaluates the chart (or its extension) at x.
  template <typename Derived>
  Vector operator()(const Eigen::MatrixBase<Derived>& x) const {
    return b_ + d_.cwiseProduct(x);
  }

  template <typename Derived>
  Vector preimage(const Eigen::MatrixBase<Derived>& p) const {
    return (p - b_).cwiseQuotient(d_);
  }

  bool operator==(const DiagonalAffineChart& o) const {
    return gamma_ == o.gamma_ && b_ == o.b_ && d_ == o.d_;
  }

 private:
  Vector b_;
  Vector d_;
  Scalar gamma_;
};

using AffineChart = DiagonalAffineChart<double>;

// Ambient regions.

struct PuncturedPlane {
  bool operator==(const PuncturedPlane&) const = default;
};

/// C^n minus the coordinate hyperplanes {x_i = 0} for i in active_axes (zero-based).
struct PolydiscComplement {
  int n = 1;
  std::vector<int> active_axes;
  bool operator==(const PolydiscComplement&) const = default;
};

/// The level hypersurface {x^alpha = c}.
struct MonomialLevelSet {
  std::vector<int> alpha;
  std::complex<double> c;
  bool operator==(const MonomialLevelSet&) const = default;
};

using AmbientSpec = std::variant<PuncturedPlane, PolydiscComplement, MonomialLevelSet>;

inline int ambient_dim(const AmbientSpec& a) {
  if (std::holds_alternative<PuncturedPlane>(a)) return 1;
  if (const auto* p = std::get_if<PolydiscComplement>(&a)) return p->n;
  return static_cast<int>(std::get<MonomialLevelSet>(a).alpha.size());
}

inline void validate(const AmbientSpec& a) {
  if (const auto* p = std::get_if<PolydiscComplement>(&a)) {
    if (p->n < 1 || p->active_axes.empty())
      throw Error(Errc::InvalidArgument, "polydisc complement needs n >= 1 and a nonempty set of active axes");
    for (int ax : p->active_axes)
      if (ax < 0 || ax >= p->n) throw Error(Errc::InvalidArgument, "active axis out of range");
  } else if (const auto* m = std::get_if<MonomialLevelSet>(&a)) {
    if (m->alpha.empty()) throw Error(Errc::InvalidArgument, "empty exponent vector");
    for (int e : m->alpha)
      if (e < 1) throw Error(Errc::InvalidArgument, "monomial exponents must be >= 1");
  }
}

/// Squared Euclidean norm of the chart preimage of p.
template <typename Scalar, typename Derived>
Scalar preimage_norm2(const DiagonalAffineChart<Scalar>& chart, const Eigen::MatrixBase<Derived>& p) {
  if (p.size() != chart.dim())
    throw Error(Errc::DimensionMismatch, "point dimension " + std::to_string(p.size()) +
                                             " does not match chart dimension " + std::to_string(chart.dim()));
  return chart.preimage(p).squaredNorm();
}

/// Membership of p in the image of the closed ball of radius `scale`.
template <typename Scalar, typename Derived>
bool chart_contains(const DiagonalAffineChart<Scalar>& chart, const Eigen::MatrixBase<Derived>& p, Scalar scale) {
  if (!(scale > Scalar(0)) || scale > chart.gamma())
    throw Error(Errc::InvalidArgument, "membership scale must lie in (0, gamma]");
  return preimage_norm2(chart, p) <= scale * scale;
}

/// Exact certificate that the extension to the ball of radius `scale` avoids
/// the deleted coordinate hyperplanes: coordinate i sweeps the disk of radius
/// scale*|d_i| around b_i.
template <typename Scalar>
bool avoidance_certificate(const DiagonalAffineChart<Scalar>& chart, const AmbientSpec& ambient, Scalar scale) {
  if (scale > chart.gamma()) throw Error(Errc::InvalidArgument, "certificate scale exceeds the doubling factor");
  auto clear = [&](Eigen::Index i) { return std::abs(chart.translation()[i]) > scale * std::abs(chart.scales()[i]); };
  if (std::holds_alternative<PuncturedPlane>(ambient)) {
    if (chart.dim() != 1) throw Error(Errc::DimensionMismatch, "punctured plane charts are one-dimensional");
    return clear(0);
  }
  if (const auto* p = std::get_if<PolydiscComplement>(&ambient)) {
    if (chart.dim() != p->n) throw Error(Errc::DimensionMismatch, "chart dimension does not match the ambient");
    for (int ax : p->active_axes)
      if (!clear(ax)) return false;
    return true;
  }
  throw Error(Errc::UnsupportedAmbient, "level-set charts are certified by the levelset module");
}

/// A finite, homogeneous list of charts sharing one doubling factor.
template <typename Chart>
struct Covering {
  AmbientSpec ambient;
  double gamma = 2.0;
  std::vector<Chart> charts;

  std::size_t kappa() const { return charts.size(); }
  bool operator==(const Covering&) const = default;
};

using AffineCovering = Covering<AffineChart>;

}  // namespace atlas

#endif  // ATLAS_CORE_HPP
