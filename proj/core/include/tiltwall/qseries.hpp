#pragma once

#include <cstdint>
#include <vector>

#include "tiltwall/rational.hpp"

namespace tiltwall {

/// Truncated formal series sum_k a_k q^(offset + k), k = 0..order. Terms
/// beyond `order` are unknown rather than zero; order = -1 means nothing is
/// known.
class QSeries {
 public:
  QSeries() = default;
  QSeries(Rational offset, std::vector<Rational> coeffs);
  /// The zero series known through `order`.
  static QSeries zero(const Rational& offset, std::int64_t order);
  /// c q^x, known through step `order`.
  static QSeries monomial(const Rational& x, const Rational& c, std::int64_t order);

  const Rational& offset() const { return offset_; }
  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient at step k; zero past the end.
  Rational at(std::int64_t k) const;
  /// Coefficient of q^x; zero when x is not offset + k for known k.
  Rational coefficient(const Rational& x) const;
  /// Exponents with nonzero known coefficient, increasing.
  std::vector<Rational> support() const;
  bool is_zero() const;
  bool integral() const;

  /// Drops steps above `order`.
  QSeries truncated(std::int64_t order) const;
  /// Re-expresses with a smaller offset (a whole number of steps lower).
  QSeries rebased(const Rational& new_offset) const;
  /// Multiplies by q^x.
  QSeries shifted(const Rational& x) const;
  QSeries scaled(const Rational& c) const;

  /// Offsets must differ by an integer (`IncompatibleOffsets`). The result
  /// sits at the smaller offset and is known up to the smaller of the two
  /// known exponents.
  friend QSeries operator+(const QSeries& x, const QSeries& y);
  friend QSeries operator-(const QSeries& x, const QSeries& y);
  /// Offsets add; order is the minimum of the two orders.
  friend QSeries operator*(const QSeries& x, const QSeries& y);
  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  Rational offset_;
  std::vector<Rational> coeffs_;
};

}  // namespace tiltwall
