#include "atlas/json_io.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"

namespace atlas {

namespace {

using nlohmann::json;

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json vector_json(const CPoint& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v[i]));
  return out;
}

json real_vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

std::complex<double> parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(Errc::ParseError, "complex numbers are written as [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

CPoint parse_vector(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(Errc::ParseError, "expected a nonempty array of [re, im] pairs");
  CPoint v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = parse_complex(j[i]);
  return v;
}

Eigen::VectorXd parse_real_vector(const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected an array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

json ambient_json(const AmbientSpec& a) {
  if (std::holds_alternative<PuncturedPlane>(a)) return {{"kind", "punctured_plane"}};
  if (const auto* p = std::get_if<PolydiscComplement>(&a))
    return {{"kind", "polydisc_complement"}, {"n", p->n}, {"active_axes", p->active_axes}};
  const auto& m = std::get<MonomialLevelSet>(a);
  return {{"kind", "monomial_level_set"}, {"alpha", m.alpha}, {"c", complex_json(m.c)}};
}

AmbientSpec parse_ambient(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  AmbientSpec a;
  if (kind == "punctured_plane") {
    a = PuncturedPlane{};
  } else if (kind == "polydisc_complement") {
    a = PolydiscComplement{j.at("n").get<int>(), j.at("active_axes").get<std::vector<int>>()};
  } else if (kind == "monomial_level_set") {
    a = MonomialLevelSet{j.at("alpha").get<std::vector<int>>(), parse_complex(j.at("c"))};
  } else {
    throw Error(Errc::ParseError, "unknown ambient kind '" + kind + "'");
  }
  validate(a);
  return a;
}

json region_json(const SampleRegion& r) {
  if (const auto* a = std::get_if<AnnulusRegion>(&r)) return {{"kind", "annulus"}, {"delta", a->delta}};
  if (const auto* p = std::get_if<PolydiscRegion>(&r))
    return {{"kind", "polydisc"}, {"n", p->n}, {"eta", p->eta}, {"active_axes", p->active_axes}};
  const auto& g = std::get<LevelGraphRegion>(r);
  return {{"kind", "level_graph"}, {"alpha", g.alpha}, {"c", complex_json(g.c)}, {"eta", g.eta}};
}

SampleRegion parse_region(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "annulus") return AnnulusRegion{j.at("delta").get<double>()};
  if (kind == "polydisc")
    return PolydiscRegion{j.at("n").get<int>(), j.at("eta").get<double>(), j.at("active_axes").get<std::vector<int>>()};
  if (kind == "level_graph")
    return LevelGraphRegion{j.at("alpha").get<std::vector<int>>(), parse_complex(j.at("c")), j.at("eta").get<double>()};
  throw Error(Errc::ParseError, "unknown region kind '" + kind + "'");
}

json chart_json(const AffineChart& c) {
  return {{"kind", "diag_affine"}, {"b", vector_json(c.translation())}, {"d", vector_json(c.scales())}};
}

json chart_json(const MonomialLevelChart& c) {
  return {{"kind", "level_branch"},
          {"b", vector_json(c.base().translation())},
          {"d", vector_json(c.base().scales())},
          {"branch", c.branch()}};
}

// Header fields first, charts streamed last, one per line.
template <typename ForEach>
void write_document(std::ostream& os, const AmbientSpec& ambient, double gamma, const std::optional<SampleRegion>& region,
                    ForEach&& for_each) {
  os << "{\"schema_version\":" << json(kSchemaVersion).dump() << ",\n";
  os << "\"ambient\":" << ambient_json(ambient).dump() << ",\n";
  os << "\"gamma\":" << json(gamma).dump() << ",\n";
  if (region) os << "\"region\":" << region_json(*region).dump() << ",\n";
  os << "\"charts\":[";
  bool first = true;
  for_each([&](const json& chart) {
    os << (first ? "\n" : ",\n") << chart.dump();
    first = false;
  });
  os << "\n]}\n";
}

json parse_stream(std::istream& is) {
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

void check_schema(const json& j) {
  if (!j.is_object() || !j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    throw Error(Errc::ParseError, std::string("expected schema_version ") + kSchemaVersion);
}

}  // namespace

void write_covering(std::ostream& os, const AffineCovering& cov, const std::optional<SampleRegion>& region) {
  write_document(os, cov.ambient, cov.gamma, region, [&](auto&& emit) {
    for (const AffineChart& c : cov.charts) emit(chart_json(c));
  });
}

void write_covering(std::ostream& os, const LevelCovering& cov, const std::optional<SampleRegion>& region) {
  write_document(os, cov.ambient, cov.gamma, region, [&](auto&& emit) {
    for (const MonomialLevelChart& c : cov.charts) emit(chart_json(c));
  });
}

void write_covering(std::ostream& os, const PolydiscCovering& cov, const std::optional<SampleRegion>& region) {
  write_document(os, cov.ambient(), cov.gamma(), region, [&](auto&& emit) {
    cov.for_each_chart([&](std::size_t, const AffineChart& c) { emit(chart_json(c)); });
  });
}

CoveringDocument read_covering(std::istream& is) {
  const json j = parse_stream(is);
  check_schema(j);
  try {
    const AmbientSpec ambient = parse_ambient(j.at("ambient"));
    const double gamma = j.at("gamma").get<double>();
    std::optional<SampleRegion> region;
    if (j.contains("region")) region = parse_region(j["region"]);
    const json& charts = j.at("charts");
    if (!charts.is_array()) throw Error(Errc::ParseError, "charts must be an array");
    if (const auto* level = std::get_if<MonomialLevelSet>(&ambient)) {
      LevelCovering cov{ambient, gamma, {}};
      cov.charts.reserve(charts.size());
      for (const json& c : charts) {
        if (c.at("kind") != "level_branch") throw Error(Errc::ParseError, "level-set coverings hold level_branch charts");
        cov.charts.emplace_back(AffineChart(parse_vector(c.at("b")), parse_vector(c.at("d")), gamma),
                                c.at("branch").get<int>(), level->alpha, level->c);
      }
      return {std::move(cov), region};
    }
    AffineCovering cov{ambient, gamma, {}};
    cov.charts.reserve(charts.size());
    for (const json& c : charts) {
      if (c.at("kind") != "diag_affine") throw Error(Errc::ParseError, "affine coverings hold diag_affine charts");
      cov.charts.emplace_back(parse_vector(c.at("b")), parse_vector(c.at("d")), gamma);
      if (cov.charts.back().dim() != ambient_dim(ambient))
        throw Error(Errc::ParseError, "chart dimension does not match the ambient");
    }
    return {std::move(cov), region};
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad covering document: ") + e.what());
  }
}

void write_acharts(std::ostream& os, const AChartDocument& doc) {
  os << "{\"schema_version\":" << json(kSchemaVersion).dump() << ",\n";
  os << "\"kind\":\"achart_list\",\n";
  os << "\"coeff\":" << json(doc.data.coeff).dump() << ",\n";
  os << "\"mu\":" << real_vector_json(doc.data.mu).dump() << ",\n";
  os << "\"eps\":" << json(doc.eps).dump() << ",\n";
  os << "\"charts\":[";
  bool first = true;
  for (const RealAChart& c : doc.charts) {
    const json cj = {{"y", real_vector_json(c.center())}, {"z0", real_vector_json(c.offset())}, {"c3", c.c3()}};
    os << (first ? "\n" : ",\n") << cj.dump();
    first = false;
  }
  os << "\n]}\n";
}

AChartDocument read_acharts(std::istream& is) {
  const json j = parse_stream(is);
  check_schema(j);
  try {
    if (j.at("kind") != "achart_list") throw Error(Errc::ParseError, "expected an achart_list document");
    AChartDocument doc;
    doc.data = MonomialData{j.at("coeff").get<double>(), parse_real_vector(j.at("mu"))};
    doc.eps = j.at("eps").get<double>();
    for (const json& c : j.at("charts")) {
      doc.charts.emplace_back(parse_real_vector(c.at("y")), parse_real_vector(c.at("z0")), c.at("c3").get<double>(),
                              doc.data);
    }
    return doc;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad a-chart document: ") + e.what());
  }
}

}  // namespace atlas
