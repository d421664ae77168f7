#include <gtest/gtest.h>

#include <sstream>

#include "atlas/annulus.hpp"
#include "atlas/json_io.hpp"

using namespace atlas;

namespace {

template <typename C>
std::string dump(const C& cov, const std::optional<SampleRegion>& region = {}) {
  std::ostringstream os;
  write_covering(os, cov, region);
  return os.str();
}

}  // namespace

TEST(Json, AnnulusRoundTrip) {
  const AffineCovering cov = cover_annulus(1e-3, 2.0);
  const std::string text = dump(cov, AnnulusRegion{1e-3});
  std::istringstream is(text);
  const CoveringDocument doc = read_covering(is);
  EXPECT_EQ(std::get<AffineCovering>(doc.covering), cov);
  EXPECT_EQ(std::get<AnnulusRegion>(*doc.region), AnnulusRegion{1e-3});
  // writing the parsed document again gives the same bytes
  EXPECT_EQ(dump(std::get<AffineCovering>(doc.covering), doc.region), text);
}

TEST(Json, PolydiscStreamMatchesMaterialized) {
  const PolydiscCovering lazy = cover_punctured_polydisc(2, 0.6, 2.0);
  EXPECT_EQ(dump(lazy), dump(lazy.materialize()));
  std::istringstream is(dump(lazy, PolydiscRegion{2, 0.6, {0, 1}}));
  const CoveringDocument doc = read_covering(is);
  EXPECT_EQ(std::get<AffineCovering>(doc.covering), lazy.materialize());
}

TEST(Json, LevelSetRoundTrip) {
  const LevelCovering cov = cover_monomial_level_set({3, 1}, {0.02, -0.01}, 2.0);
  std::istringstream is(dump(cov));
  const CoveringDocument doc = read_covering(is);
  EXPECT_EQ(std::get<LevelCovering>(doc.covering), cov);
  EXPECT_FALSE(doc.region.has_value());
}

TEST(Json, AChartRoundTrip) {
  Eigen::VectorXd mu(2);
  mu << 0.5, -0.25;
  AChartDocument doc{MonomialData{0.3, mu}, 1e-2, cover_monomial_graph(MonomialData{0.3, mu}, 1e-2)};
  std::ostringstream os;
  write_acharts(os, doc);
  std::istringstream is(os.str());
  EXPECT_EQ(read_acharts(is), doc);
}

TEST(Json, Deterministic) {
  EXPECT_EQ(dump(cover_annulus(0.01, 4.0)), dump(cover_annulus(0.01, 4.0)));
}

TEST(Json, RejectsBadInput) {
  for (const char* text : {"not json", "{}", R"({"schema_version":"other/9"})",
                           R"({"schema_version":"atlas-covering/1","ambient":{"kind":"torus"},"gamma":2.0,"charts":[]})",
                           R"({"schema_version":"atlas-covering/1","ambient":{"kind":"punctured_plane"},"gamma":2.0,
                               "charts":[{"kind":"diag_affine","b":[[0.5,0.0],[0.1,0.0]],"d":[[0.1,0.0],[0.1,0.0]]}]})"}) {
    std::istringstream is(text);
    try {
      read_covering(is);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << text;
    }
  }
}

TEST(Json, LosslessDoubles) {
  const AffineChart ch(CPoint::Constant(1, {0.1 + 0.2, 1.0 / 3.0}), CPoint::Constant(1, {1e-300, 0.0}), 2.0);
  const AffineCovering cov{PuncturedPlane{}, 2.0, {ch}};
  std::istringstream is(dump(cov));
  EXPECT_EQ(std::get<AffineCovering>(read_covering(is).covering), cov);
}
