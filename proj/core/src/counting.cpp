#include "tiltwall/counting.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

void InvariantTable::set(std::int64_t degree, std::int64_t charge, const BigInt& value) {
  if (value == 0) {
    values_.erase({degree, charge});
  } else {
    values_[{degree, charge}] = value;
  }
}

void InvariantTable::set_empty_below(std::int64_t degree, std::int64_t charge) {
  below_[degree] = charge;
}

BigInt InvariantTable::get(std::int64_t degree, std::int64_t charge) const {
  if (auto t = below_.find(degree); t != below_.end() && charge < t->second) return 0;
  auto it = values_.find({degree, charge});
  return it == values_.end() ? BigInt(0) : it->second;
}

std::optional<std::int64_t> InvariantTable::empty_below(std::int64_t degree) const {
  auto t = below_.find(degree);
  if (t == below_.end()) return std::nullopt;
  return t->second;
}

BigInt chi_vn_integer(const CurveCharge& cc, const ThreefoldData& X) {
  const Rational chi = chi_vn(cc, X);
  if (!chi.is_integer()) {
    throw Error(ErrorKind::NonIntegerChi, "chi(v(n)) = " + chi.to_string() + " is not an integer");
  }
  return chi.num();
}

namespace {

// (-1)^(k-1) k
BigInt signed_multiplicity(const BigInt& k) {
  const bool odd = mpz_odd_p(k.get_mpz_t()) != 0;
  return odd ? BigInt(k) : BigInt(-k);
}

std::int64_t require_int64(const Rational& v, const char* what) {
  if (!v.is_integer() || !v.fits_int64()) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be an integer");
  }
  return v.to_int64();
}

}  // namespace

BigInt e_n(const CurveCharge& cc, const ThreefoldData& X) {
  const BigInt chi = chi_vn_integer(cc, X);
  const BigInt t = X.n_tors;
  return signed_multiplicity(chi) * t * t;
}

BigInt dt_from_mnop(const BigInt& I_value, const CurveCharge& cc, const ThreefoldData& X) {
  return e_n(cc, X) * I_value;
}

TodaResult toda_sum(const CurveCharge& cc, const ThreefoldData& X, const InvariantTable& I,
                    const InvariantTable& P) {
  if (!X.pic_rank1) {
    throw Error(ErrorKind::NotPicRank1, "toda_sum assumes Pic X = Z H");
  }
  const std::int64_t beta = require_int64(cc.betaH, "beta.H");
  const std::int64_t m = require_int64(cc.m, "m");
  const std::int64_t n = cc.n;
  const BigInt chi = chi_vn_integer(cc, X);

  TodaResult res;
  if (beta < 0) return res;
  const std::int64_t deg_max = 6 * beta;
  const std::int64_t bound = (6 * beta + 1) * n;  // |m_i| < bound

  for (std::int64_t b1 = 0; b1 + beta <= deg_max; ++b1) {
    const std::int64_t b2 = b1 + beta;
    const BigInt k = chi - BigInt(n) * b1;
    const BigInt mult = signed_multiplicity(k);
    for (std::int64_t m1 = -bound + 1; m1 < bound; ++m1) {
      const std::int64_t m2 = m1 - n * b1 - m;
      if (m2 <= -bound || m2 >= bound) continue;
      ++res.cone_points;
      const BigInt p = P.get(b1, -m1);
      if (p == 0) continue;
      const BigInt i = I.get(b2, m2);
      if (i == 0) continue;
      TodaTerm term{b1, m1, b2, m2, mult, mult * i * p};
      res.value += term.value;
      res.terms.push_back(std::move(term));
    }
  }
  return res;
}

Rational mhat(const CurveCharge& cc, const ThreefoldData& X) {
  if (!cc.Q) throw Error(ErrorKind::MissingQ, "mhat needs Q");
  const Rational n(static_cast<long long>(cc.n));
  return cc.m + n * cc.betaH / 2 - n * X.C2H() / 24 - n * n * n * X.H3() / 24 + *cc.Q / 2;
}

CurveCharge twist_curve_charge(const CurveCharge& cc, std::int64_t a_in, const ThreefoldData& X) {
  const Rational a(static_cast<long long>(a_in));
  const Rational n(static_cast<long long>(cc.n));
  const Rational h = X.H3();
  CurveCharge out = cc;
  out.betaH = cc.betaH - a * n * h;
  out.m = cc.m + a * cc.betaH + a * n * n * h / 2 - a * a * n * h / 2;
  if (cc.Q) out.Q = *cc.Q - 2 * a * cc.betaH + a * a * n * h;
  return out;
}

std::int64_t mock_depth(std::int64_t n, const ThreefoldData& X) {
  if (!X.pic_rank1) throw Error(ErrorKind::NotPicRank1, "mock_depth assumes Pic X = Z H");
  if (n < 1) throw Error(ErrorKind::InvalidN, "n must be positive");
  return n - 1;
}

}  // namespace tiltwall
