#pragma once

#include <compare>
#include <optional>
#include <string>

#include "tiltwall/charges.hpp"
#include "tiltwall/rational.hpp"

namespace tiltwall {

/// A slope: either a finite rational or +infinity. +inf is strictly greater
/// than every finite value and equal to itself.
class SlopeValue {
 public:
  SlopeValue() = default;  // +inf
  SlopeValue(const Rational& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static SlopeValue infinity() { return SlopeValue(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Throws `InvalidArgument` for +inf.
  const Rational& value() const;

  std::string to_string() const { return value_ ? value_->to_string() : "+inf"; }

  friend bool operator==(const SlopeValue&, const SlopeValue&) = default;
  friend std::strong_ordering operator<=>(const SlopeValue& a, const SlopeValue& b);

 private:
  std::optional<Rational> value_;
};

/// Quotient num/den with the +inf convention for den = 0.
SlopeValue slope_quotient(const Rational& num, const Rational& den);

/// A point (b, w) of the parameter plane.
struct StabilityParam {
  Rational b;
  Rational w;

  /// w > b^2/2.
  bool in_U() const { return w > b * b / 2; }

  friend bool operator==(const StabilityParam&, const StabilityParam&) = default;
};

struct PlanePoint {
  Rational b;
  Rational w;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

SlopeValue mu_H(const Charge& c, const ThreefoldData& X);

/// ch2.H / ch1.H^2 for rank-zero classes. Throws `NonzeroRank`.
SlopeValue nu_H(const Charge& c);

/// (ch2.H - w ch0 H^3) / ch1^{bH}.H^2. Throws `OutsideU` unless p is in U.
SlopeValue nu_bw(const Charge& c, const StabilityParam& p, const ThreefoldData& X);

/// The unrescaled slope (w ch2^{bH}.H - w^3/6 ch0 H^3) / (w^2 ch1^{bH}.H^2).
/// Throws `ZeroW` when w = 0.
SlopeValue N_bw(const Charge& c, const StabilityParam& p, const ThreefoldData& X);

/// Numerical condition for a nu_{b,w}-semistable object of the tilted heart:
/// ch1^{bH}.H^2 >= 0, and ch2.H - w ch0 H^3 >= 0 whenever ch1^{bH}.H^2 = 0.
bool heart_positive(const Charge& c, const StabilityParam& p, const ThreefoldData& X);

/// (ch1.H^2/(ch0 H^3), ch2.H/(ch0 H^3)). Throws `RankZero`.
PlanePoint pi_projection(const Charge& c, const ThreefoldData& X);

/// Large-volume attractor slope ch2.H/ch1.H^2 - (1/n) ch1.beta / ch1.H^2.
/// ch1.beta defaults to (ch1.H^2/H^3) beta.H on Picard-rank-one threefolds.
SlopeValue attractor_slope(const Charge& c, const CurveCharge& cc, const ThreefoldData& X,
                           const std::optional<Rational>& ch1_beta = std::nullopt);

}  // namespace tiltwall
