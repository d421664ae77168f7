// atlas: build, check and measure doubling coverings from the command line.
//
// Exit codes: 0 success, 1 a verification reported pass=false (or no chain
// exists), 2 usage or input error. Errors go to stderr as one JSON object.

#include <algorithm>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "atlas/annulus.hpp"
#include "atlas/json_io.hpp"
#include "atlas/levelset.hpp"
#include "atlas/polydisc.hpp"
#include "atlas/real_acharts.hpp"
#include "atlas/scaling.hpp"
#include "atlas/verify.hpp"

namespace {

using nlohmann::json;
using namespace atlas;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
  return is;
}

std::complex<double> parse_level(const std::vector<double>& c) {
  if (c.size() == 1) return c[0];
  if (c.size() != 2) throw Error(Errc::InvalidArgument, "--c takes RE or RE,IM");
  return {c[0], c[1]};
}

CPoint parse_point(const std::vector<double>& v) {
  if (v.empty() || v.size() % 2 != 0) throw Error(Errc::InvalidArgument, "points are given as re,im pairs per coordinate");
  CPoint p(static_cast<Eigen::Index>(v.size() / 2));
  for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = {v[2 * static_cast<std::size_t>(i)], v[2 * static_cast<std::size_t>(i) + 1]};
  return p;
}

json point_json(const CPoint& p) {
  json out = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) out.push_back({p[i].real(), p[i].imag()});
  return out;
}

json coverage_json(const CoverageReport& r) {
  json miss = json::array();
  for (const CPoint& p : r.uncovered) miss.push_back(point_json(p));
  return {{"samples_total", r.samples_total}, {"samples_covered", r.samples_covered}, {"rate", r.rate()},
          {"pass", r.pass}, {"uncovered", miss}};
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubling coverings of punctured polydiscs, monomial level sets and monomial graphs"};
  app.set_version_flag("--version", std::string(kSchemaVersion));
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  // cover ...
  auto* cover = app.add_subcommand("cover", "Build a covering and write it as JSON");
  cover->require_subcommand(1);

  double delta = 0.0, zeta = 2.0;
  std::string out;
  auto* c_ann = cover->add_subcommand("annulus", "Whitney disks covering {delta <= |z| <= 1}");
  c_ann->add_option("--delta", delta)->required();
  c_ann->add_option("--zeta", zeta)->required();
  c_ann->add_option("--out", out)->required();

  int dim = 1;
  double eta = 0.0, gamma = 2.0;
  bool count_only = false;
  std::vector<int> active_axes;
  auto* c_poly = cover->add_subcommand("polydisc", "Covering of {eta <= |x_i| <= 1} in C^n");
  c_poly->add_option("--dim", dim)->required();
  c_poly->add_option("--eta", eta)->required();
  c_poly->add_option("--gamma", gamma)->required();
  c_poly->add_option("--out", out);
  c_poly->add_flag("--count-only", count_only, "Print the plan and kappa without building charts");
  c_poly->add_option("--active-axes", active_axes, "Zero-based punctured axes (default: all)")->delimiter(',');

  std::vector<int> alpha;
  std::vector<double> level;
  auto* c_lvl = cover->add_subcommand("levelset", "Covering of {x^alpha = c}");
  c_lvl->add_option("--alpha", alpha)->required()->delimiter(',');
  c_lvl->add_option("--c", level)->required()->delimiter(',');
  c_lvl->add_option("--gamma", gamma)->required();
  c_lvl->add_option("--out", out)->required();

  std::vector<double> mu;
  double coeff = 1.0, eps = 0.0;
  auto* c_graph = cover->add_subcommand("graph", "a-charts for the graph of coeff * x^mu over (eps,1)^m");
  c_graph->add_option("--mu", mu)->required()->delimiter(',');
  c_graph->add_option("--coeff", coeff)->required();
  c_graph->add_option("--eps", eps)->required();
  c_graph->add_option("--out", out)->required();

  // verify ...
  auto* verify = app.add_subcommand("verify", "Check a covering or a list of a-charts");
  verify->require_subcommand(1);

  std::string covering_path;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::optional<double> region_param;
  auto* v_cov = verify->add_subcommand("coverage", "Sample the covered region and locate every point");
  v_cov->add_option("--covering", covering_path)->required();
  v_cov->add_option("--samples", samples);
  v_cov->add_option("--seed", seed);
  v_cov->add_option("--eta", region_param, "Inner radius, when the file records no region");

  std::size_t per_chart = 32;
  auto* v_dbl = verify->add_subcommand("doubling", "Certify every chart at scale gamma");
  v_dbl->add_option("--covering", covering_path)->required();
  v_dbl->add_option("--samples-per-chart", per_chart, "Residual samples per level-set chart");
  v_dbl->add_option("--seed", seed);

  std::string charts_path;
  int grid = 16;
  auto* v_ach = verify->add_subcommand("achart", "Boundary scan of every a-chart");
  v_ach->add_option("--charts", charts_path)->required();
  v_ach->add_option("--grid", grid);
  v_ach->add_option("--seed", seed);

  // chain
  std::vector<double> from, to;
  auto* chain = app.add_subcommand("chain", "Shortest witnessed chain between two points");
  chain->add_option("--covering", covering_path)->required();
  chain->add_option("--from", from, "re,im per coordinate")->required()->delimiter(',');
  chain->add_option("--to", to, "re,im per coordinate")->required()->delimiter(',');

  // scaling
  std::string experiment;
  std::vector<double> sweep;
  auto* scaling = app.add_subcommand("scaling", "Chart counts over a parameter sweep");
  scaling->add_option("--experiment", experiment)->required()->check(
      CLI::IsMember({"annulus", "polydisc", "levelset", "graph"}));
  scaling->add_option("--grid", sweep)->required()->delimiter(',');
  scaling->add_option("--out", out)->required();
  scaling->add_option("--zeta", zeta);
  int sweep_dim = 2;
  scaling->add_option("--dim", sweep_dim);
  scaling->add_option("--gamma", gamma);
  scaling->add_option("--alpha", alpha)->delimiter(',');
  scaling->add_option("--mu", mu)->delimiter(',');
  scaling->add_option("--coeff", coeff);

  // eta
  EtaParams ep;
  auto* eta_cmd = app.add_subcommand("eta", "Inner radius eta from a tube width delta");
  eta_cmd->add_option("--delta", delta)->required();
  eta_cmd->add_option("--c-lower", ep.c_lower)->required();
  eta_cmd->add_option("--c-unit", ep.c_unit)->required();
  eta_cmd->add_option("--d", ep.degree)->required();
  eta_cmd->add_option("--alpha0", ep.alpha0)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c_ann) {
      const AffineCovering cov = cover_annulus(delta, zeta);
      auto os = open_out(out);
      write_covering(os, cov, AnnulusRegion{delta});
      emit({{"kappa", cov.kappa()}, {"out", out}});
    } else if (*c_poly) {
      if (!count_only && out.empty()) throw Error(Errc::InvalidArgument, "--out is required unless --count-only is given");
      PolydiscCoveringPlan plan = plan_punctured_polydisc(dim, eta, gamma, active_axes);
      emit({{"n", plan.n}, {"eta", plan.eta}, {"gamma", plan.gamma}, {"active_axes", plan.active_axes},
            {"level_zeta", plan.level_zeta}, {"level_factor", plan.level_factor}, {"level_count", plan.level_count},
            {"level_kappa", plan.level_kappa}, {"kappa", plan.kappa()}});
      if (!count_only) {
        const PolydiscCovering cov(std::move(plan));
        auto os = open_out(out);
        write_covering(os, cov, PolydiscRegion{dim, eta, active_axes});
      }
    } else if (*c_lvl) {
      const std::complex<double> c = parse_level(level);
      const LevelCovering cov = cover_monomial_level_set(alpha, c, gamma);
      const int alpha0 = *std::min_element(alpha.begin(), alpha.end());
      auto os = open_out(out);
      write_covering(os, cov, LevelGraphRegion{alpha, c, level_lower_bound(c, 1.0, alpha0)});
      emit({{"kappa", cov.kappa()}, {"out", out}});
    } else if (*c_graph) {
      const MonomialData data{coeff, Eigen::Map<const Eigen::VectorXd>(mu.data(), static_cast<Eigen::Index>(mu.size()))};
      AChartDocument doc{data, eps, cover_monomial_graph(data, eps)};
      auto os = open_out(out);
      write_acharts(os, doc);
      emit({{"kappa", doc.charts.size()}, {"c3", choose_C3(data.mu, std::exp2(data.total_degree()))}, {"out", out}});
    } else if (*v_cov) {
      auto is = open_in(covering_path);
      const CoveringDocument doc = read_covering(is);
      std::optional<SampleRegion> region = doc.region;
      if (region_param) {
        if (const auto* aff = std::get_if<AffineCovering>(&doc.covering)) {
          if (std::holds_alternative<PuncturedPlane>(aff->ambient))
            region = AnnulusRegion{*region_param};
          else
            region = PolydiscRegion{ambient_dim(aff->ambient), *region_param,
                                    std::get<PolydiscComplement>(aff->ambient).active_axes};
        } else {
          const auto& lvl = std::get<LevelCovering>(doc.covering);
          const auto& m = std::get<MonomialLevelSet>(lvl.ambient);
          region = LevelGraphRegion{m.alpha, m.c, *region_param};
        }
      }
      if (!region) throw Error(Errc::RegionMismatch, "the covering records no region; pass --eta");
      const CoverageReport r = std::visit([&](const auto& cov) { return check_coverage(cov, *region, samples, seed); },
                                          doc.covering);
      emit(coverage_json(r));
      if (!r.pass) throw Failure{kExitFail};
    } else if (*v_dbl) {
      auto is = open_in(covering_path);
      const CoveringDocument doc = read_covering(is);
      const DoublingReport r = std::holds_alternative<AffineCovering>(doc.covering)
                                   ? certify_doubling(std::get<AffineCovering>(doc.covering))
                                   : certify_doubling(std::get<LevelCovering>(doc.covering), per_chart, seed);
      json failing = json::array();
      for (std::size_t i = 0; i < r.per_chart.size() && failing.size() < 100; ++i)
        if (!r.per_chart[i]) failing.push_back(i);
      emit({{"charts", r.per_chart.size()}, {"failures", r.failures}, {"max_residual", r.max_residual},
            {"failing", failing}, {"pass", r.pass}});
      if (!r.pass) throw Failure{kExitFail};
    } else if (*v_ach) {
      auto is = open_in(charts_path);
      const AChartDocument doc = read_acharts(is);
      std::size_t failures = 0;
      double worst = 0.0, certificate = 0.0;
      for (const RealAChart& c : doc.charts) {
        const AChartReport r = verify_achart(c, grid, seed);
        worst = std::max(worst, r.max_deviation);
        certificate = std::max(certificate, r.certificate);
        if (!r.pass) ++failures;
      }
      emit({{"charts", doc.charts.size()}, {"failures", failures}, {"max_deviation", worst},
            {"certificate", certificate}, {"pass", failures == 0}});
      if (failures != 0) throw Failure{kExitFail};
    } else if (*chain) {
      auto is = open_in(covering_path);
      const CoveringDocument doc = read_covering(is);
      const auto* cov = std::get_if<AffineCovering>(&doc.covering);
      if (cov == nullptr) throw Error(Errc::UnsupportedAmbient, "chains are computed on affine coverings");
      const Chain ch = chain_between(*cov, parse_point(from), parse_point(to));
      json witnesses = json::array();
      for (const CPoint& w : ch.witnesses) witnesses.push_back(point_json(w));
      emit({{"length", ch.length()}, {"chart_indices", ch.chart_indices}, {"witnesses", witnesses}});
    } else if (*scaling) {
      ExperimentConfig cfg;
      cfg.zeta = zeta;
      cfg.n = sweep_dim;
      cfg.gamma = gamma;
      if (!alpha.empty()) cfg.alpha = alpha;
      if (!mu.empty()) cfg.mu = Eigen::Map<const Eigen::VectorXd>(mu.data(), static_cast<Eigen::Index>(mu.size()));
      cfg.coeff = coeff;
      const std::vector<ScalingRow> rows = scaling_experiment(experiment, sweep, cfg);
      auto os = open_out(out);
      write_scaling_csv(os, rows);
      const FitResult loglog = fit_log_exponent(rows);
      std::vector<double> x, y;
      for (const ScalingRow& r : rows) {
        x.push_back(r.log_inv_param);
        y.push_back(static_cast<double>(r.kappa));
      }
      const FitResult lin = fit_linear(x, y);
      emit({{"rows", rows.size()}, {"loglog_slope", loglog.slope}, {"loglog_r2", loglog.r2},
            {"linear_slope", lin.slope}, {"linear_r2", lin.r2}, {"out", out}});
    } else if (*eta_cmd) {
      emit({{"eta", eta_from_delta(delta, ep)}});
    }
  } catch (const Failure& f) {
    return f.code;
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return e.code() == Errc::NoContainingChart || e.code() == Errc::Disconnected ? kExitFail : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return kExitUsage;
  }
  return 0;
}
