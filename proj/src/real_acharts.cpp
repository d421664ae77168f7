#include "atlas/real_acharts.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "atlas/error.hpp"

namespace atlas {

double MonomialData::operator()(const Eigen::VectorXd& x) const {
  double v = coeff;
  for (Eigen::Index i = 0; i < mu.size(); ++i) v *= std::pow(x[i], mu[i]);
  return v;
}

RealAChart::RealAChart(Eigen::VectorXd center, Eigen::VectorXd offset, double c3, MonomialData data)
    : y_(std::move(center)), z0_(std::move(offset)), c3_(c3), data_(std::move(data)) {
  if (y_.size() < 1 || y_.size() != z0_.size() || y_.size() != data_.mu.size())
    throw Error(Errc::DimensionMismatch, "a-chart centre, offset and exponents must share a dimension");
  if (!(c3_ > 3.0)) throw Error(Errc::InvalidArgument, "a-chart scale C3 must exceed 3");
  if ((z0_.array().abs() > c3_).any()) throw Error(Errc::InvalidArgument, "a-chart offset exceeds C3");
  if ((y_.array() <= 0.0).any() || !(data_.coeff > 0.0))
    throw Error(Errc::InvalidArgument, "a-chart centre and coefficient must be positive");
}

Eigen::VectorXd RealAChart::operator()(const Eigen::VectorXd& w) const {
  if (w.size() != dim()) throw Error(Errc::DimensionMismatch, "a-chart argument has the wrong dimension");
  Eigen::VectorXd out(dim() + 1);
  out.head(dim()) = y_.array() * (1.0 + (z0_ + w).array() / (2.0 * c3_));
  out[dim()] = data_(out.head(dim()));
  return out;
}

Eigen::VectorXcd RealAChart::extend(const Eigen::VectorXcd& z) const {
  if (z.size() != dim()) throw Error(Errc::DimensionMismatch, "a-chart argument has the wrong dimension");
  Eigen::VectorXcd out(dim() + 1);
  std::complex<double> last = data_.coeff;
  for (int i = 0; i < dim(); ++i) {
    const std::complex<double> ratio = 1.0 + (z0_[i] + z[i]) / (2.0 * c3_);
    if (!(ratio.real() > 0.0)) throw Error(Errc::NotHolomorphic, "a-chart extension leaves the right half-plane");
    out[i] = y_[i] * ratio;
    // y_i > 0, so the principal power splits as y^mu * ratio^mu
    last *= std::pow(y_[i], data_.mu[i]) * std::pow(ratio, data_.mu[i]);
  }
  out[dim()] = last;
  return out;
}

std::optional<Eigen::VectorXd> RealAChart::preimage(const Eigen::VectorXd& x, double tol) const {
  if (x.size() != dim()) throw Error(Errc::DimensionMismatch, "point has the wrong dimension");
  Eigen::VectorXd w = (x.array() / y_.array() - 1.0) * 2.0 * c3_ - z0_.array();
  if ((w.array().abs() > 1.0 + tol).any()) return std::nullopt;
  return w;
}

std::vector<double> axis_scale_centers(double eps) {
  if (!(eps > 0.0)) throw Error(Errc::InvalidArgument, "eps must be positive");
  std::vector<double> out{2.0 / 3.0};
  // interval k reaches down to (1/3) 2^-k
  while (out.back() / 2.0 > eps) out.push_back(out.back() / 2.0);
  return out;
}

std::vector<Eigen::VectorXd> cover_unit_cube_scales(double eps, int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "dimension must be positive");
  const std::vector<double> axis = axis_scale_centers(eps);
  const std::size_t k = axis.size();
  std::size_t total = 1;
  for (int i = 0; i < m; ++i) total *= k;
  std::vector<Eigen::VectorXd> out;
  out.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    Eigen::VectorXd y(m);
    std::size_t rest = flat;
    for (int i = m - 1; i >= 0; --i) {
      y[i] = axis[rest % k];
      rest /= k;
    }
    out.push_back(std::move(y));
  }
  return out;
}

double certified_bound(const Eigen::VectorXd& mu, double value_bound, double c3) {
  if (!(c3 > 3.0)) throw Error(Errc::InvalidArgument, "certified bound needs C3 > 3");
  const double s = 3.0 / c3;
  return value_bound * std::expm1(mu.cwiseAbs().sum() * s / (1.0 - s));
}

double choose_C3(const Eigen::VectorXd& mu, double value_bound) {
  if (!(value_bound >= 1.0)) throw Error(Errc::InvalidArgument, "value bound must be >= 1");
  for (double c3 = 4.0;; c3 += 1.0)
    if (certified_bound(mu, value_bound, c3) <= 1.0 && 3.0 / (2.0 * c3) <= 1.0) return c3;
}

std::vector<RealAChart> cover_monomial_graph(const MonomialData& data, double eps) {
  if (!(eps > 0.0) || !(eps < 0.5)) throw Error(Errc::InvalidArgument, "eps must lie in (0, 1/2)");
  if (!(data.coeff > 0.0) || data.dim() < 1) throw Error(Errc::InvalidArgument, "monomial needs coeff > 0 and m >= 1");
  const int m = data.dim();
  const double c3 = choose_C3(data.mu, std::exp2(data.total_degree()));
  // odd-integer offsets whose unit boxes tile (-C3, C3)
  const int half = static_cast<int>(std::ceil(c3 / 2.0));
  std::vector<double> offsets;
  for (int o = -(2 * half - 1); o <= 2 * half - 1; o += 2) offsets.push_back(o);
  const std::size_t per_axis = offsets.size();
  std::size_t per_box = 1;
  for (int i = 0; i < m; ++i) per_box *= per_axis;

  std::vector<RealAChart> out;
  for (const Eigen::VectorXd& y : cover_unit_cube_scales(eps, m)) {
    for (std::size_t flat = 0; flat < per_box; ++flat) {
      Eigen::VectorXd z0(m);
      std::size_t rest = flat;
      for (int i = m - 1; i >= 0; --i) {
        z0[i] = offsets[rest % per_axis];
        rest /= per_axis;
      }
      // keep the chart iff its real sub-box meets (eps,1)^m and {coeff x^mu < 1}
      bool keep = true;
      double min_value = data.coeff;
      for (int i = 0; i < m && keep; ++i) {
        const double lo = y[i] * (1.0 + (z0[i] - 1.0) / (2.0 * c3));
        const double hi = y[i] * (1.0 + (z0[i] + 1.0) / (2.0 * c3));
        keep = lo < 1.0 && hi > eps;
        min_value *= std::pow(data.mu[i] >= 0.0 ? std::max(lo, eps) : std::min(hi, 1.0), data.mu[i]);
      }
      if (keep && min_value < 1.0) out.emplace_back(y, z0, c3, data);
    }
  }
  return out;
}

AChartReport verify_achart(const HolomorphicMap& extension, int dim, int grid, std::uint64_t seed) {
  if (dim < 1 || grid < 1) throw Error(Errc::InvalidArgument, "verify_achart needs dim >= 1 and grid >= 1");
  const Eigen::VectorXcd centre = extension(Eigen::VectorXcd::Zero(dim));
  AChartReport report;
  auto probe = [&](const Eigen::VectorXcd& z) {
    const Eigen::VectorXcd v = extension(z);
    if (!v.allFinite()) throw Error(Errc::NotHolomorphic, "extension is not finite on the radius-3 polydisc");
    report.max_deviation = std::max(report.max_deviation, (v - centre).cwiseAbs().maxCoeff());
  };
  std::size_t total = 1;
  for (int i = 0; i < dim; ++i) total *= static_cast<std::size_t>(grid);
  Eigen::VectorXcd z(dim);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (int i = dim - 1; i >= 0; --i) {
      z[i] = std::polar(3.0, 2.0 * std::numbers::pi * static_cast<double>(rest % grid) / grid);
      rest /= static_cast<std::size_t>(grid);
    }
    probe(z);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int s = 0; s < 1000; ++s) {
    for (int i = 0; i < dim; ++i) z[i] = std::polar(3.0 * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
    probe(z);
  }
  report.pass = report.max_deviation <= 1.0 + 1e-9;
  return report;
}

AChartReport verify_achart(const RealAChart& chart, int grid, std::uint64_t seed) {
  AChartReport report =
      verify_achart([&](const Eigen::VectorXcd& z) { return chart.extend(z); }, chart.dim(), grid, seed);
  report.certificate = certified_bound(chart.data().mu, std::exp2(chart.data().total_degree()), chart.c3());
  return report;
}

double shrink_for_tube(double delta, double lipschitz) {
  if (!(delta > 0.0) || delta > 1.0 || !(lipschitz >= 1.0))
    throw Error(Errc::InvalidArgument, "shrink_for_tube needs delta in (0,1] and lipschitz >= 1");
  return delta / lipschitz;
}

}  // namespace atlas
