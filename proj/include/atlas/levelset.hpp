#ifndef ATLAS_LEVELSET_HPP
#define ATLAS_LEVELSET_HPP

#include <complex>
#include <vector>

#include "atlas/core.hpp"

namespace atlas {

/// A base chart on C^(n-1) lifted to {x^alpha = c} through one branch of
/// x_1 = (c / xbar^alphabar)^(1/alpha_1).
class MonomialLevelChart {
 public:
  MonomialLevelChart(AffineChart base, int branch, std::vector<int> alpha, std::complex<double> c);

  const AffineChart& base() const { return base_; }
  int branch() const { return branch_; }
  const std::vector<int>& alpha() const { return alpha_; }
  std::complex<double> level() const { return c_; }
  double gamma() const { return base_.gamma(); }
  int dim() const { return static_cast<int>(alpha_.size()); }

  /// Branch value g_k at the base point phi(x), computed through coordinatewise
  /// principal logarithms around the base centre.
  std::complex<double> branch_value(const CPoint& x) const;

  bool operator==(const MonomialLevelChart&) const = default;

 private:
  AffineChart base_;
  int branch_;
  std::vector<int> alpha_;
  std::complex<double> c_;
};

using LevelCovering = Covering<MonomialLevelChart>;

/// (g_k(phi(x)), phi(x)) for x in the ball of radius `scale` <= gamma.
CPoint evaluate_level_chart(const MonomialLevelChart& chart, const CPoint& x, double scale = 1.0);

/// x^alpha for a point of C^n.
std::complex<double> monomial(const std::vector<int>& alpha, const CPoint& x);

/// Covers {x^alpha = c} over the punctured polydisc of dimension n-1 with
/// alpha_1 charts per base chart; chart index = base index * alpha_1 + branch.
LevelCovering cover_monomial_level_set(const std::vector<int>& alpha, std::complex<double> c, double gamma);

/// The base covering used by cover_monomial_level_set, as an affine covering.
AffineCovering level_set_base(const LevelCovering& cov);

}  // namespace atlas

#endif  // ATLAS_LEVELSET_HPP
