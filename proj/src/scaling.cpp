#include "atlas/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>

#include "atlas/annulus.hpp"
#include "atlas/error.hpp"
#include "atlas/polydisc.hpp"
#include "atlas/real_acharts.hpp"
#include "atlas/verify.hpp"

namespace atlas {

std::vector<ScalingRow> scaling_experiment(const std::string& builder, const std::vector<double>& grid,
                                           const ExperimentConfig& cfg) {
  if (grid.size() < 3) throw Error(Errc::InsufficientPoints, "a scaling sweep needs at least 3 parameters");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] < grid[i - 1])) throw Error(Errc::InvalidArgument, "parameter grid must be strictly descending");
  for (double p : grid)
    if (!(p > 0.0) || !(p < 1.0)) throw Error(Errc::InvalidArgument, "sweep parameters must lie in (0, 1)");

  std::vector<ScalingRow> rows;
  for (double p : grid) {
    ScalingRow row;
    row.param = p;
    row.log_inv_param = std::log(1.0 / p);
    if (builder == "annulus") {
      row.kappa = annulus_layout(p, cfg.zeta).count();
      row.bound = evaluate_bound({"whitney", {{"zeta", cfg.zeta}, {"delta", p}}});
    } else if (builder == "polydisc") {
      row.kappa = plan_punctured_polydisc(cfg.n, p, cfg.gamma).kappa();
      row.bound = evaluate_bound({"polydisc", {{"n", cfg.n}, {"gamma", cfg.gamma}, {"eta", p}}});
    } else if (builder == "levelset") {
      if (cfg.alpha.size() < 2) throw Error(Errc::InvalidArgument, "level-set sweeps need n >= 2");
      const int alpha0 = *std::min_element(cfg.alpha.begin(), cfg.alpha.end());
      const double eta = level_lower_bound(p, 1.0, alpha0);
      const int n = static_cast<int>(cfg.alpha.size());
      row.kappa = plan_punctured_polydisc(n - 1, eta, cfg.gamma).kappa() * static_cast<std::size_t>(cfg.alpha[0]);
      row.bound = evaluate_bound(
          {"levelset", {{"alpha1", cfg.alpha[0]}, {"n", n}, {"gamma", cfg.gamma}, {"eta", eta}}});
    } else if (builder == "graph") {
      const MonomialData data{cfg.coeff, cfg.mu};
      row.kappa = cover_monomial_graph(data, p).size();
      row.bound = evaluate_bound({"achart_count",
                                        {{"c3", choose_C3(cfg.mu, std::exp2(data.total_degree()))},
                                         {"eps", p},
                                         {"m", data.dim()}}});
    } else {
      throw Error(Errc::InvalidArgument, "unknown experiment '" + builder + "'");
    }
    row.ratio = row.kappa == 0 ? 0.0 : static_cast<double>(row.kappa) / row.bound;
    rows.push_back(row);
  }
  return rows;
}

FitResult fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "fit needs equally many x and y values");
  if (x.size() < 2) throw Error(Errc::InsufficientPoints, "fit needs at least 2 points");
  const auto n = static_cast<Eigen::Index>(x.size());
  const Eigen::Map<const Eigen::VectorXd> xv(x.data(), n), yv(y.data(), n);
  const double mx = xv.mean(), my = yv.mean();
  const Eigen::ArrayXd dx = xv.array() - mx, dy = yv.array() - my;
  const double sxx = (dx * dx).sum();
  if (sxx == 0.0) throw Error(Errc::InsufficientPoints, "fit needs distinct x values");
  FitResult f;
  f.slope = (dx * dy).sum() / sxx;
  f.intercept = my - f.slope * mx;
  const double ss_tot = (dy * dy).sum();
  const double ss_res = (dy - f.slope * dx).square().sum();
  f.r2 = ss_tot == 0.0 ? (ss_res == 0.0 ? 1.0 : 0.0) : 1.0 - ss_res / ss_tot;
  return f;
}

FitResult fit_log_exponent(const std::vector<ScalingRow>& rows) {
  if (rows.size() < 3) throw Error(Errc::InsufficientPoints, "exponent fit needs at least 3 rows");
  std::vector<double> x, y;
  for (const ScalingRow& r : rows) {
    if (r.kappa == 0 || !(r.param > 0.0) || !(r.param < 1.0))
      throw Error(Errc::InvalidArgument, "exponent fit needs kappa > 0 and param in (0, 1)");
    x.push_back(std::log(std::log(1.0 / r.param)));
    y.push_back(std::log(static_cast<double>(r.kappa)));
  }
  return fit_linear(x, y);
}

void write_scaling_csv(std::ostream& os, const std::vector<ScalingRow>& rows) {
  const auto old_precision = os.precision(std::numeric_limits<double>::max_digits10);
  os << "param,kappa,paper_bound,ratio,log_inv_param\n";
  for (const ScalingRow& r : rows)
    os << r.param << ',' << r.kappa << ',' << r.bound << ',' << r.ratio << ',' << r.log_inv_param << '\n';
  os.precision(old_precision);
}

}  // namespace atlas
