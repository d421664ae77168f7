#include "atlas/chart_index.hpp"

#include <algorithm>

namespace atlas {

namespace {
constexpr std::size_t kLeafSize = 8;

Eigen::ArrayXd point_box(const CPoint& p) {
  Eigen::ArrayXd out(2 * p.size());
  out.head(p.size()) = p.real().array();
  out.tail(p.size()) = p.imag().array();
  return out;
}
}  // namespace

ChartIndex::ChartIndex(const AffineCovering& cov, double scale) : cov_(cov), scale_(scale) {
  const std::size_t count = cov.charts.size();
  lo_.reserve(count);
  hi_.reserve(count);
  for (const AffineChart& c : cov.charts) {
    const Eigen::Index n = c.dim();
    Eigen::ArrayXd centre(2 * n), half(2 * n);
    centre.head(n) = c.translation().real().array();
    centre.tail(n) = c.translation().imag().array();
    half.head(n) = scale * c.scales().cwiseAbs().array();
    half.tail(n) = half.head(n);
    lo_.push_back(centre - half);
    hi_.push_back(centre + half);
  }
  order_.resize(count);
  for (std::size_t i = 0; i < count; ++i) order_[i] = i;
  if (count > 0) build(0, count);
}

int ChartIndex::build(std::size_t begin, std::size_t end) {
  Node node;
  node.lo = lo_[order_[begin]];
  node.hi = hi_[order_[begin]];
  for (std::size_t i = begin + 1; i < end; ++i) {
    node.lo = node.lo.min(lo_[order_[i]]);
    node.hi = node.hi.max(hi_[order_[i]]);
  }
  node.begin = begin;
  node.end = end;
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  if (end - begin <= kLeafSize) return id;
  Eigen::Index axis = 0;
  (node.hi - node.lo).maxCoeff(&axis);
  const std::size_t mid = begin + (end - begin) / 2;
  auto centre = [&](std::size_t i) { return lo_[i][axis] + hi_[i][axis]; };
  std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(begin), order_.begin() + static_cast<std::ptrdiff_t>(mid),
                   order_.begin() + static_cast<std::ptrdiff_t>(end), [&](std::size_t a, std::size_t b) {
                     const double ca = centre(a), cb = centre(b);
                     return ca < cb || (ca == cb && a < b);
                   });
  const int left = build(begin, mid);
  const int right = build(mid, end);
  nodes_[static_cast<std::size_t>(id)].left = left;
  nodes_[static_cast<std::size_t>(id)].right = right;
  return id;
}

template <typename Pred, typename Visit>
void ChartIndex::query(Pred&& box_hit, Visit&& visit) const {
  if (nodes_.empty()) return;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const Node& node = nodes_[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    if (!box_hit(node.lo, node.hi)) continue;
    if (node.left < 0) {
      for (std::size_t i = node.begin; i < node.end; ++i)
        if (box_hit(lo_[order_[i]], hi_[order_[i]])) visit(order_[i]);
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
}

std::vector<std::size_t> ChartIndex::candidates(const CPoint& p) const {
  const Eigen::ArrayXd x = point_box(p);
  std::vector<std::size_t> out;
  if (!cov_.charts.empty() && x.size() != lo_.front().size())
    throw Error(Errc::DimensionMismatch, "point dimension does not match the covering");
  query([&](const Box& lo, const Box& hi) { return (x >= lo).all() && (x <= hi).all(); },
        [&](std::size_t i) { out.push_back(i); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> ChartIndex::containing(const CPoint& p) const {
  std::vector<std::size_t> out;
  for (std::size_t i : candidates(p))
    if (preimage_norm2(cov_.charts[i], p) <= scale_ * scale_) out.push_back(i);
  return out;
}

std::optional<std::size_t> ChartIndex::locate(const CPoint& p) const {
  for (std::size_t i : candidates(p))
    if (preimage_norm2(cov_.charts[i], p) <= scale_ * scale_) return i;
  return std::nullopt;
}

std::vector<std::size_t> ChartIndex::overlapping(std::size_t chart) const {
  const Box& lo = lo_[chart];
  const Box& hi = hi_[chart];
  std::vector<std::size_t> out;
  query([&](const Box& l, const Box& h) { return (l <= hi).all() && (h >= lo).all(); },
        [&](std::size_t i) {
          if (i != chart) out.push_back(i);
        });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace atlas
