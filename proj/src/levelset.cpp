#include "atlas/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "atlas/polydisc.hpp"

namespace atlas {

MonomialLevelChart::MonomialLevelChart(AffineChart base, int branch, std::vector<int> alpha, std::complex<double> c)
    : base_(std::move(base)), branch_(branch), alpha_(std::move(alpha)), c_(c) {
  if (alpha_.size() < 2 || static_cast<Eigen::Index>(alpha_.size()) != base_.dim() + 1)
    throw Error(Errc::DimensionMismatch, "level chart needs a base of dimension n-1 for n >= 2");
  for (int e : alpha_)
    if (e < 1) throw Error(Errc::InvalidArgument, "monomial exponents must be >= 1");
  if (branch_ < 0 || branch_ >= alpha_[0]) throw Error(Errc::InvalidArgument, "branch index out of range");
  if (c_ == std::complex<double>(0.0)) throw Error(Errc::NotARegularValue, "0 is the singular value of a monomial");
}

std::complex<double> MonomialLevelChart::branch_value(const CPoint& x) const {
  const auto& b = base_.translation();
  const auto& d = base_.scales();
  std::complex<double> log_sum = std::log(c_);
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    const double e = alpha_[static_cast<std::size_t>(i + 1)];
    log_sum -= e * (std::log(b[i]) + std::log(1.0 + d[i] * x[i] / b[i]));
  }
  const double a1 = alpha_[0];
  const std::complex<double> omega_k = std::polar(1.0, 2.0 * std::numbers::pi * branch_ / a1);
  return omega_k * std::exp(log_sum / a1);
}

CPoint evaluate_level_chart(const MonomialLevelChart& chart, const CPoint& x, double scale) {
  const AffineChart& base = chart.base();
  if (x.size() != base.dim()) throw Error(Errc::DimensionMismatch, "level chart argument has the wrong dimension");
  if (!(scale > 0.0) || scale > base.gamma() || x.squaredNorm() > scale * scale * (1.0 + default_tolerance()))
    throw Error(Errc::InvalidArgument, "level chart evaluated outside the ball of radius scale <= gamma");
  std::vector<int> axes(static_cast<std::size_t>(base.dim()));
  for (std::size_t i = 0; i < axes.size(); ++i) axes[i] = static_cast<int>(i);
  if (!avoidance_certificate(base, PolydiscComplement{static_cast<int>(base.dim()), axes}, base.gamma()))
    throw Error(Errc::BranchUndefined, "base chart extension meets a coordinate hyperplane");
  CPoint out(base.dim() + 1);
  out[0] = chart.branch_value(x);
  out.tail(base.dim()) = base(x);
  return out;
}

std::complex<double> monomial(const std::vector<int>& alpha, const CPoint& x) {
  if (static_cast<Eigen::Index>(alpha.size()) != x.size()) throw Error(Errc::DimensionMismatch, "exponent/point size mismatch");
  std::complex<double> v = 1.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) v *= std::pow(x[i], alpha[static_cast<std::size_t>(i)]);
  return v;
}

LevelCovering cover_monomial_level_set(const std::vector<int>& alpha, std::complex<double> c, double gamma) {
  const AmbientSpec ambient = MonomialLevelSet{alpha, c};
  validate(ambient);
  if (alpha.size() < 2) throw Error(Errc::InvalidArgument, "level sets are covered for n >= 2");
  if (c == std::complex<double>(0.0)) throw Error(Errc::NotARegularValue, "0 is the singular value of a monomial");
  if (std::abs(c) >= 1.0) throw Error(Errc::LevelOutsideRange, "|c| >= 1 leaves no level set over the punctured polydisc");
  const int alpha0 = *std::min_element(alpha.begin(), alpha.end());
  const double eta = level_lower_bound(c, 1.0, alpha0);
  const int n = static_cast<int>(alpha.size());
  const PolydiscCovering base = cover_punctured_polydisc(n - 1, eta, gamma);
  LevelCovering cov{ambient, gamma, {}};
  cov.charts.reserve(base.kappa() * static_cast<std::size_t>(alpha[0]));
  base.for_each_chart([&](std::size_t, const AffineChart& chart) {
    for (int k = 0; k < alpha[0]; ++k) cov.charts.emplace_back(chart, k, alpha, c);
  });
  return cov;
}

AffineCovering level_set_base(const LevelCovering& cov) {
  const auto& level = std::get<MonomialLevelSet>(cov.ambient);
  const int n = static_cast<int>(level.alpha.size());
  std::vector<int> axes(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) axes[static_cast<std::size_t>(i)] = i;
  AffineCovering base{n == 2 ? AmbientSpec{PuncturedPlane{}} : AmbientSpec{PolydiscComplement{n - 1, axes}}, cov.gamma, {}};
  const auto branches = static_cast<std::size_t>(level.alpha[0]);
  for (std::size_t i = 0; i < cov.charts.size(); i += branches) base.charts.push_back(cov.charts[i].base());
  return base;
}

}  // namespace atlas
