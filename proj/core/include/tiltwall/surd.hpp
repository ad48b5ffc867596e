#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "tiltwall/rational.hpp"

namespace tiltwall {

/// Exact element a + b*sqrt(D) of a real quadratic field.
///
/// Normal form: the radicand is a non-negative integer (a rational radicand
/// p/q is rewritten as sqrt(p*q)/q). When sqrt(D) is rational, or b = 0,
/// the value collapses to a plain rational with b = D = 0.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Surd(const Rational& a, const Rational& b, const Rational& radicand);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& radicand() const { return d_; }

  std::optional<Rational> as_rational() const;
  bool is_rational() const { return b_.is_zero(); }

  std::string to_string() const;
  std::string to_decimal(int digits) const;
  double to_double() const;

  Surd operator-() const;
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);

  friend bool operator==(const Surd& x, const Surd& y);

 private:
  void normalize();

  Rational a_;
  Rational b_;
  Rational d_;
};

/// Exact ordering of the two real numbers. Throws `IncomparableRadicands`
/// when both are irrational over different radicands.
std::strong_ordering surd_cmp(const Surd& x, const Surd& y);

/// Sign (-1, 0, +1) of a + b*sqrt(D).
int surd_sign(const Surd& x);

/// Real roots of p x^2 + q x + r = 0, increasing. A double root is returned once.
std::vector<Surd> solve_quadratic(const Rational& p, const Rational& q, const Rational& r);

inline std::optional<Rational> surd_is_rational(const Surd& x) { return x.as_rational(); }

}  // namespace tiltwall
