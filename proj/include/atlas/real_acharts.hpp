#ifndef ATLAS_REAL_ACHARTS_HPP
#define ATLAS_REAL_ACHARTS_HPP

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace atlas {

/// x -> coeff * prod_i x_i^mu_i on (0,1)^m.
struct MonomialData {
  double coeff = 1.0;
  Eigen::VectorXd mu;

  int dim() const { return static_cast<int>(mu.size()); }
  double total_degree() const { return mu.cwiseAbs().sum(); }
  double operator()(const Eigen::VectorXd& x) const;
  bool operator==(const MonomialData& o) const { return coeff == o.coeff && mu == o.mu; }
};

/// Real-analytic chart I^m -> R^(m+1) onto a piece of the graph of a monomial:
///   x_i(w) = y_i (1 + (z0_i + w_i) / (2 C3)),   last = coeff * prod x_i^mu_i.
/// The same formula extends holomorphically to the polydisc of radius 3 when C3 > 3.
class RealAChart {
 public:
  RealAChart(Eigen::VectorXd center, Eigen::VectorXd offset, double c3, MonomialData data);

  int dim() const { return static_cast<int>(y_.size()); }
  const Eigen::VectorXd& center() const { return y_; }
  const Eigen::VectorXd& offset() const { return z0_; }
  double c3() const { return c3_; }
  const MonomialData& data() const { return data_; }

  Eigen::VectorXd operator()(const Eigen::VectorXd& w) const;
  Eigen::VectorXcd extend(const Eigen::VectorXcd& z) const;

  /// w with x(w) = x, when the graph point over x lies in this chart's image.
  std::optional<Eigen::VectorXd> preimage(const Eigen::VectorXd& x, double tol = 1e-12) const;

  bool operator==(const RealAChart& o) const {
    return y_ == o.y_ && z0_ == o.z0_ && c3_ == o.c3_ && data_ == o.data_;
  }

 private:
  Eigen::VectorXd y_;
  Eigen::VectorXd z0_;
  double c3_;
  MonomialData data_;
};

/// Scale centres (2/3) 2^-k, k = 0..K, the smallest K whose intervals
/// (y/2, 3y/2) reach down to eps.
std::vector<double> axis_scale_centers(double eps);

/// m-fold product of axis_scale_centers, last axis varying fastest.
std::vector<Eigen::VectorXd> cover_unit_cube_scales(double eps, int m);

/// Analytic bound A (exp(M s / (1 - s)) - 1), s = 3 / C3, on the deviation of
/// the last coordinate over the radius-3 polydisc, given a centre value <= A.
double certified_bound(const Eigen::VectorXd& mu, double value_bound, double c3);

/// Smallest integer C3 >= 4 with certified_bound <= 1 and 3 / (2 C3) <= 1.
double choose_C3(const Eigen::VectorXd& mu, double value_bound);

/// a-charts covering the graph of coeff * x^mu over {x in (eps,1)^m : coeff x^mu < 1}.
std::vector<RealAChart> cover_monomial_graph(const MonomialData& data, double eps);

struct AChartReport {
  double max_deviation = 0.0;
  double certificate = -1.0;  // analytic bound when known, else negative
  bool pass = false;
};

using HolomorphicMap = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

/// Scans |psi~(z) - psi(0)| over a grid^dim lattice of the distinguished
/// boundary {|z_i| = 3} and 1000 seeded interior points.
AChartReport verify_achart(const HolomorphicMap& extension, int dim, int grid, std::uint64_t seed);
AChartReport verify_achart(const RealAChart& chart, int grid, std::uint64_t seed = 0);

/// Cube shrinkage delta / c for a c-Lipschitz parameterization.
double shrink_for_tube(double delta, double lipschitz);

}  // namespace atlas

#endif  // ATLAS_REAL_ACHARTS_HPP
