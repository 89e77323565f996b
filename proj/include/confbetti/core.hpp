#pragma once

// Shared domain types and combinatorial primitives.
//
// Every count in this library is an exact GMP integer; nothing in the
// computation path touches floating point.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace confbetti {

using Integer = mpz_class;
using Rational = mpq_class;

enum class SurfaceKind {
  ClosedOrientable,
  OpenOrientable,
  ClosedNonorientable,
  OpenNonorientable,
};

inline const char* to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::ClosedOrientable: return "ClosedOrientable";
    case SurfaceKind::OpenOrientable: return "OpenOrientable";
    case SurfaceKind::ClosedNonorientable: return "ClosedNonorientable";
    case SurfaceKind::OpenNonorientable: return "OpenNonorientable";
  }
  return "?";
}

/// A surface of finite type.
///
/// Orientable kinds carry a genus `g`, nonorientable kinds a crosscap number
/// `h >= 1`; open kinds carry `n >= 1` punctures. Construct through the named
/// factories, which enforce these invariants.
class Surface {
 public:
  static Surface closed_orientable(int g) { return Surface(SurfaceKind::ClosedOrientable, g, 0, 0); }
  static Surface open_orientable(int g, int n) { return Surface(SurfaceKind::OpenOrientable, g, 0, n); }
  static Surface closed_nonorientable(int h) { return Surface(SurfaceKind::ClosedNonorientable, 0, h, 0); }
  static Surface open_nonorientable(int h, int n) { return Surface(SurfaceKind::OpenNonorientable, 0, h, n); }

  Surface(SurfaceKind kind, int g, int h, int n) : kind_(kind), g_(g), h_(h), n_(n) { validate(); }

  SurfaceKind kind() const { return kind_; }
  int genus() const { return g_; }
  int crosscaps() const { return h_; }
  int punctures() const { return n_; }

  bool orientable() const {
    return kind_ == SurfaceKind::ClosedOrientable || kind_ == SurfaceKind::OpenOrientable;
  }
  bool closed() const {
    return kind_ == SurfaceKind::ClosedOrientable || kind_ == SurfaceKind::ClosedNonorientable;
  }

  /// Conventional short name: S^2, Sigma_2, Sigma_{1,2}, N_3, N_{2,1}.
  std::string name() const {
    switch (kind_) {
      case SurfaceKind::ClosedOrientable:
        return g_ == 0 ? "S^2" : "Sigma_" + std::to_string(g_);
      case SurfaceKind::OpenOrientable:
        return "Sigma_{" + std::to_string(g_) + "," + std::to_string(n_) + "}";
      case SurfaceKind::ClosedNonorientable:
        return "N_" + std::to_string(h_);
      case SurfaceKind::OpenNonorientable:
        return "N_{" + std::to_string(h_) + "," + std::to_string(n_) + "}";
    }
    return "?";
  }

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  void validate() const {
    if (g_ < 0 || h_ < 0 || n_ < 0) throw std::invalid_argument("surface parameters must be nonnegative");
    if (orientable() && h_ != 0) throw std::invalid_argument("orientable surface cannot carry crosscaps");
    if (!orientable() && h_ < 1) throw std::invalid_argument("nonorientable surface needs h >= 1");
    if (!orientable() && g_ != 0) throw std::invalid_argument("nonorientable surface is described by h, not g");
    if (closed() && n_ != 0) throw std::invalid_argument("closed surface cannot have punctures");
    if (!closed() && n_ < 1) throw std::invalid_argument("open surface needs n >= 1");
  }

  SurfaceKind kind_;
  int g_;
  int h_;
  int n_;
};

/// Bigrading (homological degree i, weight k).
struct GradedIndex {
  int i = 0;
  int k = 0;

  GradedIndex() = default;
  GradedIndex(int degree, int weight) : i(degree), k(weight) {
    if (i < 0 || k < 0) throw std::invalid_argument("graded index must be nonnegative");
  }

  friend auto operator<=>(const GradedIndex&, const GradedIndex&) = default;
};

/// A Betti number: an arbitrary-precision nonnegative integer.
class BettiValue {
 public:
  BettiValue() = default;
  explicit BettiValue(Integer v) : value_(std::move(v)) {
    if (sgn(value_) < 0) throw std::domain_error("Betti number cannot be negative: " + value_.get_str());
  }
  explicit BettiValue(long v) : BettiValue(Integer(v)) {}

  const Integer& value() const { return value_; }
  std::string str() const { return value_.get_str(); }

  friend bool operator==(const BettiValue& a, const BettiValue& b) { return a.value_ == b.value_; }

 private:
  Integer value_ = 0;
};

/// Binomial coefficient with the convention used throughout: the usual value
/// for 0 <= k <= n, 1 at (n, k) = (-1, -1), and 0 everywhere else. Note that
/// binom(n, 0) = 0 for n < 0, unlike the generalized binomial.
inline Integer ext_binom(long n, long k) {
  if (n == -1 && k == -1) return 1;
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Multinomial N! / (k1! k2! (N-k1-k2)!), zero outside the valid range.
inline Integer trinomial(long total, long k1, long k2) {
  if (total < 0 || k1 < 0 || k2 < 0 || k1 + k2 > total) return 0;
  return ext_binom(total, k1) * ext_binom(total - k1, k2);
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Exact quotient; throws if `num` is not divisible by `den`.
inline Integer exact_div(const Integer& num, long den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw std::logic_error(std::string("non-integral value in ") + what + ": " + num.get_str() + "/" +
                           std::to_string(den));
  }
  return num / den;
}

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace confbetti
