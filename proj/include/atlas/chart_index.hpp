#ifndef ATLAS_CHART_INDEX_HPP
#define ATLAS_CHART_INDEX_HPP

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <vector>

#include "atlas/core.hpp"

namespace atlas {

/// Bounding-volume hierarchy over the boxes b_i +- scale*|d_i| (real and
/// imaginary parts) of a list of diagonal affine charts. Holds a reference to
/// the covering, which must outlive the index.
class ChartIndex {
 public:
  explicit ChartIndex(const AffineCovering& cov, double scale = 1.0);

  /// Charts whose box contains p, ascending.
  std::vector<std::size_t> candidates(const CPoint& p) const;

  /// Charts containing p at the index scale, ascending.
  std::vector<std::size_t> containing(const CPoint& p) const;

  /// Lowest-index chart containing p.
  std::optional<std::size_t> locate(const CPoint& p) const;

  /// Charts other than `chart` whose boxes meet its box, ascending.
  std::vector<std::size_t> overlapping(std::size_t chart) const;

  const AffineCovering& covering() const { return cov_; }

 private:
  using Box = Eigen::ArrayXd;
  struct Node {
    Box lo, hi;
    int left = -1, right = -1;
    std::size_t begin = 0, end = 0;
  };

  int build(std::size_t begin, std::size_t end);
  template <typename Pred, typename Visit>
  void query(Pred&& node_hit, Visit&& visit) const;

  const AffineCovering& cov_;
  double scale_;
  std::vector<Box> lo_, hi_;
  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;
};

}  // namespace atlas

#endif  // ATLAS_CHART_INDEX_HPP
