#include "ratgf/error.hpp"

namespace ratgf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::OutOfWindow: return "OutOfWindow";
    case ErrorKind::NotExpandableAtInfinity: return "NotExpandableAtInfinity";
    case ErrorKind::MissingDominantCorner: return "MissingDominantCorner";
    case ErrorKind::ExponentOutOfBox: return "ExponentOutOfBox";
    case ErrorKind::DegenerateEquation: return "DegenerateEquation";
    case ErrorKind::EntryOutsideX0: return "EntryOutsideX0";
    case ErrorKind::InvalidRay: return "InvalidRay";
    case ErrorKind::InconsistentCoverage: return "InconsistentCoverage";
    case ErrorKind::BoxTooSmall: return "BoxTooSmall";
    case ErrorKind::Tau0NotInX0: return "Tau0NotInX0";
    case ErrorKind::PointNotOnFace: return "PointNotOnFace";
    case ErrorKind::UnsupportedFaceData: return "UnsupportedFaceData";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_unsupported(ErrorKind kind) {
  return kind == ErrorKind::UnsupportedFaceData || kind == ErrorKind::NotExpandableAtInfinity;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace ratgf
