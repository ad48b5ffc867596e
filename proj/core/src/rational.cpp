#include "tiltwall/rational.hpp"

#include <limits>
#include <ostream>

#include "tiltwall/error.hpp"

namespace tiltwall {

Rational::Rational(long long v) {
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    v_ = static_cast<long>(v);
  } else {
    v_ = mpq_class(BigInt(std::to_string(v)));
  }
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(BigInt(std::to_string(num)), BigInt(std::to_string(den))) {}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string str(s);
    if (!str.empty() && str.front() == '+') str.erase(0, 1);
    const bool neg = !str.empty() && str.front() == '-';
    const std::string digits = neg ? str.substr(1) : str;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::InvalidArgument, "not a rational: '" + std::string(text) + "'");
    }
    return BigInt(str, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw Error(ErrorKind::InvalidArgument, "negative precision");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // |v| * 10^digits rounded half away from zero, by long division.
  BigInt num;
  mpz_abs(num.get_mpz_t(), v_.get_num_mpz_t());
  num *= scale;
  const BigInt den = v_.get_den();
  BigInt q = num / den;
  const BigInt r = num % den;
  if (2 * r >= den) ++q;
  std::string s = q.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sign() < 0 && q != 0) s.insert(0, "-");
  return s;
}

bool Rational::fits_int64() const {
  if (!is_integer()) return false;
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  const BigInt n = v_.get_num();
  return n >= lo && n <= hi;
}

std::int64_t Rational::to_int64() const {
  if (!fits_int64()) throw Error(ErrorKind::InvalidArgument, "not a 64-bit integer: " + to_string());
  return std::stoll(v_.get_num().get_str());
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division of " + to_string() + " by 0");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  const BigInt n = r.num();
  const BigInt d = r.den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) {
    return false;
  }
  root = Rational(sqrt(n), sqrt(d));
  return true;
}

}  // namespace tiltwall
