#include "tiltwall/error.hpp"

namespace tiltwall {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::NegativeRadicand: return "negative-radicand";
    case ErrorKind::IncomparableRadicands: return "incomparable-radicands";
    case ErrorKind::DegenerateLeadingCoefficient: return "degenerate-leading-coefficient";
    case ErrorKind::MissingC1c2: return "missing-c1c2";
    case ErrorKind::MissingC1sqH: return "missing-c1sqH";
    case ErrorKind::MissingQ: return "missing-Q";
    case ErrorKind::MissingPairing: return "missing-pairing";
    case ErrorKind::NonzeroRank: return "nonzero-rank";
    case ErrorKind::RankZero: return "rank-zero";
    case ErrorKind::OutsideU: return "outside-U";
    case ErrorKind::ZeroW: return "zero-w";
    case ErrorKind::ProportionalCharges: return "proportional-charges";
    case ErrorKind::NoWall: return "no-wall";
    case ErrorKind::NoIntersectionInU: return "no-intersection-in-U";
    case ErrorKind::HypothesisNotMet: return "hypothesis-not-met";
    case ErrorKind::InvalidN: return "invalid-n";
    case ErrorKind::NonIntegerChi: return "non-integer-chi";
    case ErrorKind::NotPicRank1: return "not-pic-rank1";
    case ErrorKind::ParityViolation: return "parity-violation";
    case ErrorKind::InconsistentCoset: return "inconsistent-coset";
    case ErrorKind::IncompatibleOffsets: return "incompatible-offsets";
    case ErrorKind::EmptyViewport: return "empty-viewport";
    case ErrorKind::TorsionUnsupported: return "torsion-unsupported";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Config: return "config";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace tiltwall
