#ifndef ATLAS_SUSPENSION_HPP
#define ATLAS_SUSPENSION_HPP

#include <cmath>
#include <complex>

#include "atlas/core.hpp"

namespace atlas {

/// Layer height, vertical centre and thickening of a suspension.
struct SuspensionParams {
  double lambda;
  std::complex<double> shift;
  double beta;
};

/// Doubling factor left after suspending a gamma-chart with thickening beta.
template <typename Scalar>
Scalar suspension_theta(Scalar gamma, Scalar beta) {
  return gamma / beta;
}

/// Radius of the vertical disk covered by one suspended layer.
template <typename Scalar>
Scalar suspension_covered_radius(Scalar lambda, Scalar beta) {
  return lambda * std::sqrt(1 - 1 / (beta * beta));
}

/// Layer height that makes a layer cover exactly the disk of radius r.
template <typename Scalar>
Scalar suspension_layer_height(Scalar r, Scalar beta) {
  return r / std::sqrt(1 - 1 / (beta * beta));
}

/// Doubling factor the vertical disks need so suspended layers miss the zero section.
template <typename Scalar>
Scalar suspension_annulus_zeta(Scalar mu, Scalar beta) {
  return 2 * mu / beta / std::sqrt(1 - 1 / (beta * beta));
}

/// (x, y) -> (psi~(beta x), lambda y + a), again diagonal affine.
template <typename Scalar>
DiagonalAffineChart<Scalar> suspend_chart(const DiagonalAffineChart<Scalar>& chart, const SuspensionParams& p) {
  if (!(p.beta > 1.0) || !(p.beta < chart.gamma()))
    throw Error(Errc::InvalidBeta, "suspension needs 1 < beta < gamma");
  if (!(p.lambda > 0.0)) throw Error(Errc::InvalidArgument, "suspension height must be positive");
  const Eigen::Index n = chart.dim();
  CVector<Scalar> b(n + 1), d(n + 1);
  b.head(n) = chart.translation();
  b[n] = std::complex<Scalar>(p.shift);
  d.head(n) = chart.scales() * std::complex<Scalar>(Scalar(p.beta));
  d[n] = std::complex<Scalar>(Scalar(p.lambda));
  return DiagonalAffineChart<Scalar>(std::move(b), std::move(d), suspension_theta<Scalar>(chart.gamma(), p.beta));
}

/// Appends one punctured factor to a punctured-plane or polydisc-complement ambient.
AmbientSpec suspend_ambient(const AmbientSpec& ambient);

/// Covers G x (D_1 \ D_delta) by layers of suspended copies of `base`, one
/// layer per Whitney disk of the vertical annulus. Output order: layer, then
/// base chart.
AffineCovering suspend_covering(const AffineCovering& base, double delta, double beta);

}  // namespace atlas

#endif  // ATLAS_SUSPENSION_HPP
