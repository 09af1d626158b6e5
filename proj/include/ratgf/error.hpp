#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratgf {

enum class ErrorKind {
  DimensionMismatch,
  DivisionByZero,
  OutOfWindow,
  NotExpandableAtInfinity,
  MissingDominantCorner,
  ExponentOutOfBox,
  DegenerateEquation,
  EntryOutsideX0,
  InvalidRay,
  InconsistentCoverage,
  BoxTooSmall,
  Tau0NotInX0,
  PointNotOnFace,
  UnsupportedFaceData,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// True for constructions the engine cannot represent (as opposed to bad input).
bool is_unsupported(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ratgf
