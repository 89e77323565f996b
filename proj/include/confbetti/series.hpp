#pragma once

// Truncated formal power series in t over the rationals.

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace confbetti {

/// c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}), with N the truncation order.
///
/// Binary operations truncate to the smaller of the operands' orders.
class TruncatedSeries {
 public:
  /// The zero series known to order `trunc`.
  explicit TruncatedSeries(int trunc) : coeffs_(check_trunc(trunc) + 1) {}

  /// Coefficients beyond `coeffs` are zero; entries past `trunc` are dropped.
  TruncatedSeries(std::vector<Rational> coeffs, int trunc) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(check_trunc(trunc)) + 1);
  }

  TruncatedSeries(std::initializer_list<long> coeffs, int trunc) : coeffs_(check_trunc(trunc) + 1) {
    std::size_t j = 0;
    for (long c : coeffs) {
      if (j < coeffs_.size()) coeffs_[j] = c;
      ++j;
    }
  }

  static TruncatedSeries one(int trunc) { return monomial(0, 1, trunc); }

  /// c * t^m.
  static TruncatedSeries monomial(int m, const Rational& c, int trunc) {
    TruncatedSeries s(trunc);
    if (m < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
    if (m <= trunc) s.coeffs_[m] = c;
    return s;
  }

  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  const Rational& coefficient(int j) const {
    if (j < 0) throw std::out_of_range("negative exponent");
    if (j > trunc()) {
      throw std::out_of_range("beyond truncation: t^" + std::to_string(j) + " with order " + std::to_string(trunc()));
    }
    return coeffs_[j];
  }

  /// Coefficient as an integer; throws if it is not integral.
  Integer integer_coefficient(int j) const {
    const Rational& c = coefficient(j);
    if (c.get_den() != 1) throw std::domain_error("coefficient of t^" + std::to_string(j) + " is not integral");
    return c.get_num();
  }

  TruncatedSeries truncated(int trunc) const {
    return TruncatedSeries(coeffs_, std::min(trunc, this->trunc()));
  }

  /// Multiplication by t^m; negative m divides exactly and throws when the
  /// low-order coefficients do not vanish.
  TruncatedSeries shift(int m) const {
    if (m >= 0) {
      TruncatedSeries s(trunc());
      for (int j = 0; j + m <= trunc(); ++j) s.coeffs_[j + m] = coeffs_[j];
      return s;
    }
    const int d = -m;
    for (int j = 0; j < d && j <= trunc(); ++j) {
      if (coeffs_[j] != 0) throw std::domain_error("inexact division by t");
    }
    if (trunc() - d < 0) throw std::domain_error("division by t^" + std::to_string(d) + " exhausts the truncation");
    TruncatedSeries s(trunc() - d);
    for (int j = 0; j <= s.trunc(); ++j) s.coeffs_[j] = coeffs_[j + d];
    return s;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }
  TruncatedSeries& operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.trunc(), b.trunc()));
    const int n = r.trunc();
    for (int i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  /// Equality of the coefficients both operands know.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + static_cast<long>(n), b.coeffs_.begin());
  }

  /// Agreement modulo t^m (m may exceed neither truncation order + 1).
  bool congruent(const TruncatedSeries& o, int m) const {
    if (m - 1 > trunc() || m - 1 > o.trunc()) throw std::out_of_range("congruence modulus beyond truncation");
    return std::equal(coeffs_.begin(), coeffs_.begin() + m, o.coeffs_.begin());
  }

 private:
  static int check_trunc(int trunc) {
    if (trunc < 0) throw std::invalid_argument("truncation order must be nonnegative");
    return trunc;
  }

  std::vector<Rational> coeffs_;
};

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
inline TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c) { return a * c; }
inline TruncatedSeries series_shift(const TruncatedSeries& a, int m) { return a.shift(m); }
inline const Rational& coefficient(const TruncatedSeries& a, int j) { return a.coefficient(j); }

inline TruncatedSeries power(const TruncatedSeries& a, int e) {
  if (e < 0) throw std::invalid_argument("negative series power");
  TruncatedSeries r = TruncatedSeries::one(a.trunc());
  for (int j = 0; j < e; ++j) r = r * a;
  return r;
}

/// 1 / (1 - c t^m).
inline TruncatedSeries geometric(const Rational& c, int m, int trunc) {
  if (m < 1) throw std::invalid_argument("geometric series step must be positive");
  TruncatedSeries s(trunc);
  Rational term = 1;
  for (int j = 0; j <= trunc; j += m) {
    s = s + TruncatedSeries::monomial(j, term, trunc);
    term *= c;
  }
  return s;
}

/// 1 / (1 - t)^m; the coefficient of t^j is binom(m + j - 1, j).
inline TruncatedSeries geometric_power(int m, int trunc) {
  if (m < 0) throw std::invalid_argument("geometric_power exponent must be nonnegative");
  std::vector<Rational> c(static_cast<std::size_t>(trunc) + 1);
  for (int j = 0; j <= trunc; ++j) c[j] = Rational(ext_binom(m + j - 1, j));
  if (m == 0) c[0] = 1;
  return TruncatedSeries(std::move(c), trunc);
}

/// Poincare series of X_g = Q[a~_i, b~_i] (x) Lambda[a_i, b_i]: 1/(1-t)^{2g}.
inline TruncatedSeries X_series(int g, int trunc) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  return geometric_power(2 * g, trunc);
}

/// Poincare series of Q[a~, b~] with both generators in degree 2: 1/(1-t^2)^2.
inline TruncatedSeries S_series(int trunc) {
  const auto g = geometric(1, 2, trunc);
  return g * g;
}

/// "1 + 2*t - 1/2*t^2"; zero terms are omitted.
inline std::string render(const TruncatedSeries& s) {
  std::string out;
  for (int j = 0; j <= s.trunc(); ++j) {
    Rational c = s.coefficient(j);
    if (c == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mag = to_string(c);
    if (j == 0) {
      out += mag;
    } else {
      if (c != 1) out += mag + "*";
      out += j == 1 ? "t" : "t^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace confbetti
