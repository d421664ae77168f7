#ifndef ATLAS_ERROR_HPP
#define ATLAS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace atlas {

enum class Errc {
  DimensionMismatch,
  UnsupportedAmbient,
  InvalidDoublingFactor,
  InvalidBeta,
  GammaTooSmall,
  NotARegularValue,
  LevelOutsideRange,
  BranchUndefined,
  NotHolomorphic,
  RegionMismatch,
  NoContainingChart,
  Disconnected,
  UnknownBound,
  InsufficientPoints,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnsupportedAmbient: return "UnsupportedAmbient";
    case Errc::InvalidDoublingFactor: return "InvalidDoublingFactor";
    case Errc::InvalidBeta: return "InvalidBeta";
    case Errc::GammaTooSmall: return "GammaTooSmall";
    case Errc::NotARegularValue: return "NotARegularValue";
    case Errc::LevelOutsideRange: return "LevelOutsideRange";
    case Errc::BranchUndefined: return "BranchUndefined";
    case Errc::NotHolomorphic: return "NotHolomorphic";
    case Errc::RegionMismatch: return "RegionMismatch";
    case Errc::NoContainingChart: return "NoContainingChart";
    case Errc::Disconnected: return "Disconnected";
    case Errc::UnknownBound: return "UnknownBound";
    case Errc::InsufficientPoints: return "InsufficientPoints";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace atlas

#endif  // ATLAS_ERROR_HPP
