#include "tiltwall/surd.hpp"

#include <cmath>

#include "tiltwall/error.hpp"

namespace tiltwall {

namespace {

struct Aligned {
  Rational bx;
  Rational by;
  Rational d;
};

// Writes both irrational parts over one radicand. sqrt(D') = t sqrt(D) with
// t rational exactly when D'/D is a rational square.
Aligned align(const Surd& x, const Surd& y) {
  if (x.is_rational()) return {Rational(0), y.b(), y.radicand()};
  if (y.is_rational() || x.radicand() == y.radicand()) return {x.b(), y.b(), x.radicand()};
  Rational t;
  if (rational_sqrt(y.radicand() / x.radicand(), t)) return {x.b(), y.b() * t, x.radicand()};
  throw Error(ErrorKind::IncomparableRadicands,
              "sqrt(" + x.radicand().to_string() + ") vs sqrt(" + y.radicand().to_string() + ")");
}

}  // namespace

Surd::Surd(const Rational& a, const Rational& b, const Rational& radicand)
    : a_(a), b_(b), d_(radicand) {
  if (d_.sign() < 0) throw Error(ErrorKind::NegativeRadicand, d_.to_string());
  normalize();
}

void Surd::normalize() {
  if (b_.is_zero() || d_.is_zero()) {
    b_ = 0;
    d_ = 0;
    return;
  }
  if (!d_.is_integer()) {
    const Rational q(d_.den());
    b_ /= q;
    d_ = Rational(d_.num() * d_.den());
  }
  // Pull out small square factors so equal values usually print alike.
  BigInt d = d_.num();
  BigInt k = 1;
  for (unsigned long p = 2; p < 1000; ++p) {
    const BigInt p2 = BigInt(p) * p;
    if (p2 > d) break;
    while (mpz_divisible_p(d.get_mpz_t(), p2.get_mpz_t()) != 0) {
      d /= p2;
      k *= p;
    }
  }
  d_ = Rational(d);
  b_ *= Rational(k);
  Rational root;
  if (rational_sqrt(d_, root)) {
    a_ += b_ * root;
    b_ = 0;
    d_ = 0;
  }
}

std::optional<Rational> Surd::as_rational() const {
  if (is_rational()) return a_;
  return std::nullopt;
}

std::string Surd::to_string() const {
  if (is_rational()) return a_.to_string();
  std::string out = a_.is_zero() ? "" : a_.to_string() + (b_.sign() < 0 ? " - " : " + ");
  if (a_.is_zero() && b_.sign() < 0) out += "-";
  const Rational mag = b_.abs();
  if (mag != Rational(1)) out += mag.to_string() + "*";
  return out + "sqrt(" + d_.to_string() + ")";
}

std::string Surd::to_decimal(int digits) const {
  if (is_rational()) return a_.to_decimal(digits);
  // floor(sqrt(D) * 10^(digits+2)) then round through the rational path.
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
  const BigInt scaled = d_.num() * scale * scale;
  const BigInt root = sqrt(scaled);
  const Rational approx = a_ + b_ * Rational(root, scale);
  return approx.to_decimal(digits);
}

double Surd::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(d_.to_double());
}

Surd Surd::operator-() const {
  Surd s = *this;
  s.a_ = -s.a_;
  s.b_ = -s.b_;
  return s;
}

Surd operator+(const Surd& x, const Surd& y) {
  const Aligned al = align(x, y);
  return Surd(x.a_ + y.a_, al.bx + al.by, al.d);
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
  const Aligned al = align(x, y);
  return Surd(x.a_ * y.a_ + al.bx * al.by * al.d, x.a_ * al.by + al.bx * y.a_, al.d);
}

bool operator==(const Surd& x, const Surd& y) {
  if (x.a_ != y.a_) return false;
  if (x.is_rational() || y.is_rational()) return x.is_rational() && y.is_rational();
  return x.b_.sign() == y.b_.sign() && x.b_ * x.b_ * x.d_ == y.b_ * y.b_ * y.d_;
}

int surd_sign(const Surd& x) {
  const int sa = x.a().sign();
  const int sb = x.b().sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 D.
  const Rational diff = x.a() * x.a() - x.b() * x.b() * x.radicand();
  return sa * diff.sign();
}

std::strong_ordering surd_cmp(const Surd& x, const Surd& y) {
  const int s = surd_sign(x - y);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::vector<Surd> solve_quadratic(const Rational& p, const Rational& q, const Rational& r) {
  if (p.is_zero()) throw Error(ErrorKind::DegenerateLeadingCoefficient, "p = 0");
  const Rational disc = q * q - Rational(4) * p * r;
  if (disc.sign() < 0) return {};
  const Rational centre = -q / (Rational(2) * p);
  if (disc.is_zero()) return {Surd(centre)};
  const Rational radicand = disc / (Rational(4) * p * p);
  return {Surd(centre, Rational(-1), radicand), Surd(centre, Rational(1), radicand)};
}

}  // namespace tiltwall
