#include "atlas/suspension.hpp"

#include "atlas/annulus.hpp"

namespace atlas {

AmbientSpec suspend_ambient(const AmbientSpec& ambient) {
  if (std::holds_alternative<PuncturedPlane>(ambient)) return PolydiscComplement{2, {0, 1}};
  if (const auto* p = std::get_if<PolydiscComplement>(&ambient)) {
    PolydiscComplement out = *p;
    out.active_axes.push_back(out.n);
    ++out.n;
    return out;
  }
  throw Error(Errc::UnsupportedAmbient, "only punctured ambients can be suspended");
}

AffineCovering suspend_covering(const AffineCovering& base, double delta, double beta) {
  const double mu = base.gamma;
  if (!(beta > 1.0) || !(beta < mu)) throw Error(Errc::InvalidBeta, "suspension needs 1 < beta < mu");
  AffineCovering out{suspend_ambient(base.ambient), suspension_theta(mu, beta), {}};
  const AnnulusLayout layout = annulus_layout(delta, suspension_annulus_zeta(mu, beta));
  if (layout.count() == 0) return out;
  if (base.charts.empty()) throw Error(Errc::InvalidArgument, "cannot suspend an empty covering");
  out.charts.reserve(layout.count() * base.kappa());
  for (std::size_t j = 0; j < layout.count(); ++j) {
    const Disk disk = whitney_disk(layout, j);
    const SuspensionParams p{suspension_layer_height(disk.radius, beta), disk.center, beta};
    for (const AffineChart& chart : base.charts) out.charts.push_back(suspend_chart(chart, p));
  }
  return out;
}

}  // namespace atlas
