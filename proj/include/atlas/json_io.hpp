#ifndef ATLAS_JSON_IO_HPP
#define ATLAS_JSON_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "atlas/core.hpp"
#include "atlas/levelset.hpp"
#include "atlas/polydisc.hpp"
#include "atlas/real_acharts.hpp"
#include "atlas/region.hpp"

namespace atlas {

inline constexpr const char* kSchemaVersion = "atlas-covering/1";

/// A covering file: the charts plus the region they were built to cover.
struct CoveringDocument {
  std::variant<AffineCovering, LevelCovering> covering;
  std::optional<SampleRegion> region;

  bool operator==(const CoveringDocument&) const = default;
};

// Charts are written one per line, keys sorted, doubles in shortest
// round-trip form, so equal inputs give byte-identical files.
void write_covering(std::ostream& os, const AffineCovering& cov, const std::optional<SampleRegion>& region = {});
void write_covering(std::ostream& os, const LevelCovering& cov, const std::optional<SampleRegion>& region = {});
void write_covering(std::ostream& os, const PolydiscCovering& cov, const std::optional<SampleRegion>& region = {});

CoveringDocument read_covering(std::istream& is);

struct AChartDocument {
  MonomialData data;
  double eps = 0.0;
  std::vector<RealAChart> charts;

  bool operator==(const AChartDocument&) const = default;
};

void write_acharts(std::ostream& os, const AChartDocument& doc);
AChartDocument read_acharts(std::istream& is);

}  // namespace atlas

#endif  // ATLAS_JSON_IO_HPP
