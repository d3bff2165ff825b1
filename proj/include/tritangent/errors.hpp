#pragma once

#include <stdexcept>
#include <string>

namespace tritangent {

enum class Errc {
  NonConvex,
  BadParameter,
  OffCurve,
  WindowTooSmall,
  HeightOutOfRange,
  ToleranceNotMet,
  DegenerateFigure,
  NoApexInWindow,
  BadGrid,
  IllConditioned,
  EmptyGrid,
  InsufficientSpread,
  MissingThirdDerivative,
  SingularAtOrigin,
  NonPositiveSample,
  ParseError,
  TooFewPoints,
  NotConvex,
  WindowTooLarge,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonConvex: return "NonConvex";
    case Errc::BadParameter: return "BadParameter";
    case Errc::OffCurve: return "OffCurve";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::HeightOutOfRange: return "HeightOutOfRange";
    case Errc::ToleranceNotMet: return "ToleranceNotMet";
    case Errc::DegenerateFigure: return "DegenerateFigure";
    case Errc::NoApexInWindow: return "NoApexInWindow";
    case Errc::BadGrid: return "BadGrid";
    case Errc::IllConditioned: return "IllConditioned";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::InsufficientSpread: return "InsufficientSpread";
    case Errc::MissingThirdDerivative: return "MissingThirdDerivative";
    case Errc::SingularAtOrigin: return "SingularAtOrigin";
    case Errc::NonPositiveSample: return "NonPositiveSample";
    case Errc::ParseError: return "ParseError";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::NotConvex: return "NotConvex";
    case Errc::WindowTooLarge: return "WindowTooLarge";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace tritangent
