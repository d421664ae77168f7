#ifndef ATLAS_ANNULUS_HPP
#define ATLAS_ANNULUS_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "atlas/core.hpp"

namespace atlas {

/// Ring geometry of the Whitney disk construction for a given doubling factor.
struct WhitneyDiskParams {
  double ring_ratio;             // q: radius shrink between consecutive rings
  double disks_per_ring_factor;  // disks per ring divided by zeta
  int disks_per_ring;
};

struct Disk {
  std::complex<double> center;
  double radius;
};

/// Count-level description of a Whitney covering of D_1 \ D_delta.
struct AnnulusLayout {
  double delta = 1.0;
  double zeta = 2.0;
  double ring_ratio = 0.875;
  int rings = 0;
  int disks_per_ring = 0;

  std::size_t count() const { return static_cast<std::size_t>(rings) * static_cast<std::size_t>(disks_per_ring); }
};

WhitneyDiskParams whitney_disk_params(double zeta);

AnnulusLayout annulus_layout(double delta, double zeta);

/// Disk number `index`; rings run outermost first, angle increasing within a ring.
Disk whitney_disk(const AnnulusLayout& layout, std::size_t index);

std::vector<Disk> whitney_disks(const AnnulusLayout& layout);

/// A zeta-doubling covering of D_1 \ D_delta inside C \ {0} by disks x -> a + r x.
AffineCovering cover_annulus(double delta, double zeta);

/// A(zeta) with kappa <= A(zeta) * (log(1/delta) + 1) for every delta in (0, 1].
double annulus_constant(double zeta);

/// Point location in a Whitney layout: the disk minimizing |z - a| / r among
/// the ring/angle neighbours of z. Containment is left to the caller.
class AnnulusLocator {
 public:
  explicit AnnulusLocator(AnnulusLayout layout);

  std::optional<std::size_t> nearest(std::complex<double> z) const;
  double normalized_distance(std::complex<double> z, std::size_t index) const;
  const AnnulusLayout& layout() const { return layout_; }

 private:
  AnnulusLayout layout_;
  double log_q_;
};

}  // namespace atlas

#endif  // ATLAS_ANNULUS_HPP
