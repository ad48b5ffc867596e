#include "tiltwall/qseries.hpp"

#include <algorithm>

#include "tiltwall/error.hpp"

namespace tiltwall {

QSeries::QSeries(Rational offset, std::vector<Rational> coeffs)
    : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {}

QSeries QSeries::zero(const Rational& offset, std::int64_t order) {
  return QSeries(offset, std::vector<Rational>(static_cast<std::size_t>(std::max<std::int64_t>(order + 1, 0))));
}

QSeries QSeries::monomial(const Rational& x, const Rational& c, std::int64_t order) {
  QSeries s = zero(x, order);
  if (!s.coeffs_.empty()) s.coeffs_[0] = c;
  return s;
}

Rational QSeries::at(std::int64_t k) const {
  if (k < 0 || k > order()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational QSeries::coefficient(const Rational& x) const {
  const Rational step = x - offset_;
  if (!step.is_integer() || !step.fits_int64()) return Rational(0);
  return at(step.to_int64());
}

std::vector<Rational> QSeries::support() const {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) out.push_back(offset_ + Rational(static_cast<long long>(k)));
  }
  return out;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool QSeries::integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

QSeries QSeries::truncated(std::int64_t order) const {
  QSeries s = *this;
  if (order < this->order()) s.coeffs_.resize(static_cast<std::size_t>(std::max<std::int64_t>(order + 1, 0)));
  return s;
}

QSeries QSeries::rebased(const Rational& new_offset) const {
  const Rational gap = offset_ - new_offset;
  if (!gap.is_integer()) {
    throw Error(ErrorKind::IncompatibleOffsets,
                "offsets " + offset_.to_string() + " and " + new_offset.to_string() +
                    " differ by a non-integer");
  }
  if (gap.sign() < 0) throw Error(ErrorKind::InvalidArgument, "rebased: new offset must not exceed the old one");
  const auto k = static_cast<std::size_t>(gap.to_int64());
  std::vector<Rational> c(k + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<std::ptrdiff_t>(k));
  return QSeries(new_offset, std::move(c));
}

QSeries QSeries::shifted(const Rational& x) const { return QSeries(offset_ + x, coeffs_); }

QSeries QSeries::scaled(const Rational& c) const {
  QSeries s = *this;
  for (auto& v : s.coeffs_) v *= c;
  return s;
}

QSeries operator+(const QSeries& x, const QSeries& y) {
  const Rational base = std::min(x.offset_, y.offset_);
  // Highest exponent known in both summands.
  const Rational top = std::min(x.offset_ + Rational(static_cast<long long>(x.order())),
                                y.offset_ + Rational(static_cast<long long>(y.order())));
  QSeries a = x.rebased(base);
  QSeries b = y.rebased(base);
  const Rational span = top - base;
  const std::int64_t order = span.sign() < 0 ? -1 : span.to_int64();
  a = a.truncated(order);
  b = b.truncated(order);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] += b.coeffs_[k];
  return a;
}

QSeries operator-(const QSeries& x, const QSeries& y) { return x + y.scaled(Rational(-1)); }

QSeries operator*(const QSeries& x, const QSeries& y) {
  const std::int64_t order = std::min(x.order(), y.order());
  QSeries out = QSeries::zero(x.offset_ + y.offset_, order);
  for (std::int64_t i = 0; i <= order; ++i) {
    const Rational& xi = x.coeffs_[static_cast<std::size_t>(i)];
    if (xi.is_zero()) continue;
    for (std::int64_t j = 0; i + j <= order; ++j) {
      out.coeffs_[static_cast<std::size_t>(i + j)] += xi * y.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

}  // namespace tiltwall
