#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tiltwall {

using BigInt = mpz_class;

/// Exact rational number backed by GMP.
///
/// Always held in lowest terms with a positive denominator; zero is 0/1.
/// Values are immutable through the public interface apart from the
/// compound-assignment operators, so instances can be shared freely between
/// threads as long as nobody mutates them.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den);

  /// Accepts "p", "p/q" and optional surrounding whitespace.
  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const;
  /// Representative of this value modulo 1, in [0, 1).
  Rational frac() const;

  /// Exact "p/q" form; integers render without the denominator.
  std::string to_string() const;
  /// Fixed-point rendering with `digits` fractional digits, rounded half away
  /// from zero. Display only.
  std::string to_decimal(int digits) const;
  double to_double() const { return v_.get_d(); }

  /// Fits in a signed 64-bit integer and has denominator 1.
  bool fits_int64() const;
  std::int64_t to_int64() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Integer power with non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

/// Exact square root when `r` is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);

}  // namespace tiltwall
