#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tiltwall {

/// Failure categories shared by every module. The CLI maps them onto exit
/// codes: usage errors exit 2, `Config` exits 4, everything else exits 3.
enum class ErrorKind {
  DivisionByZero,
  NegativeRadicand,
  IncomparableRadicands,
  DegenerateLeadingCoefficient,
  MissingC1c2,
  MissingC1sqH,
  MissingQ,
  MissingPairing,
  NonzeroRank,
  RankZero,
  OutsideU,
  ZeroW,
  ProportionalCharges,
  NoWall,
  NoIntersectionInU,
  HypothesisNotMet,
  InvalidN,
  NonIntegerChi,
  NotPicRank1,
  ParityViolation,
  InconsistentCoset,
  IncompatibleOffsets,
  EmptyViewport,
  TorsionUnsupported,
  InvalidArgument,
  Config,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tiltwall
