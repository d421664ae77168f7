#ifndef ATLAS_SCALING_HPP
#define ATLAS_SCALING_HPP

#include <Eigen/Core>

#include <ostream>
#include <string>
#include <vector>

namespace atlas {

struct ScalingRow {
  double param = 0.0;  // delta, eta or eps
  std::size_t kappa = 0;
  double bound = 0.0;
  double log_inv_param = 0.0;
  double ratio = 0.0;
};

/// Fixed parameters of a sweep; each builder reads the fields it needs.
struct ExperimentConfig {
  double zeta = 2.0;               // annulus
  int n = 2;                       // polydisc
  double gamma = 2.0;              // polydisc, levelset
  std::vector<int> alpha{2, 1};    // levelset; param is |c|
  Eigen::VectorXd mu = Eigen::VectorXd::Ones(1);  // graph
  double coeff = 1.0;              // graph
};

/// builder is one of "annulus", "polydisc", "levelset", "graph". Counts come
/// from the count-only plans where one exists. The grid must be strictly
/// descending and hold at least 3 values.
std::vector<ScalingRow> scaling_experiment(const std::string& builder, const std::vector<double>& grid,
                                           const ExperimentConfig& cfg = {});

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Least squares y = slope x + intercept. R^2 is 1 for an exact fit of constant data.
FitResult fit_linear(const std::vector<double>& x, const std::vector<double>& y);

/// Regresses log kappa on log log(1/param).
FitResult fit_log_exponent(const std::vector<ScalingRow>& rows);

/// Columns: param, kappa, paper_bound, ratio, log_inv_param.
void write_scaling_csv(std::ostream& os, const std::vector<ScalingRow>& rows);

}  // namespace atlas

#endif  // ATLAS_SCALING_HPP
