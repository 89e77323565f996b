#pragma once

// Closed-form Betti numbers of unordered configuration spaces of surfaces,
// and the graded dimensions of K_g.
//
// All binomials follow ext_binom's convention. Every double sum over (j, m)
// uses a trinomial whose top argument is a quarter of an integer expression;
// that expression is asserted divisible by 4, never rounded.

#include <stdexcept>

#include "core.hpp"

namespace confbetti {

namespace detail {

inline int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// sum_{j<g} sum_{m<=j} (-1)^{g+j+1} (2j-2m+2)/(2j-m+2) * trinomial(top/4; m, 2j-m+1)
// with top = 6j + 2i + 2g - 2m + offset + parity_sign * 3 * (-1)^{i+j+g+m}.
//
// The weight times the trinomial is always an integer, so the sum is
// accumulated exactly over Q and checked integral at the end.
inline Rational genus_double_sum(long g, long i, long offset, int parity_sign) {
  Rational total = 0;
  for (long j = 0; j <= g - 1; ++j) {
    for (long m = 0; m <= j; ++m) {
      const long top = 6 * j + 2 * i + 2 * g - 2 * m + offset + parity_sign * 3 * neg_one_pow(i + j + g + m);
      if (top % 4 != 0) throw std::logic_error("non-integral trinomial top argument");
      const Integer tri = trinomial(top / 4, m, 2 * j - m + 1);
      if (tri == 0) continue;
      Rational term(tri * (2 * j - 2 * m + 2), 2 * j - m + 2);
      term.canonicalize();
      if (neg_one_pow(g + j + 1) < 0) term = -term;
      total += term;
    }
  }
  return total;
}

inline Integer integral(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string("non-integral result in ") + what);
  return q.get_num();
}

inline BettiValue betti(const Integer& v) { return BettiValue(v); }

}  // namespace detail

/// beta_i(B_k(N_h)), h >= 1.
inline BettiValue betti_closed_nonorientable(int h, int i, int k) {
  if (h < 1 || i < 0 || k < 0) throw std::invalid_argument("need h >= 1, i >= 0, k >= 0");
  if (i <= k) return detail::betti(ext_binom(h + i - 2, h - 2) + ext_binom(h + i - 5, h - 2));
  if (i == k + 1) return detail::betti(ext_binom(h + i - 5, h - 2));
  return BettiValue(0L);
}

/// beta_i(B_k(N_{h,n})), h >= 1, n >= 1.
inline BettiValue betti_open_nonorientable(int h, int n, int i, int k) {
  if (h < 1 || n < 1 || i < 0 || k < 0) throw std::invalid_argument("need h >= 1, n >= 1, i >= 0, k >= 0");
  if (i > k) return BettiValue(0L);
  return detail::betti(ext_binom(h + n + i - 3, h + n - 3) + ext_binom(h + n + i - 4, h + n - 3));
}

/// dim_{i,k} H(CE(h)) for the Heisenberg-type Lie algebra spanned by
/// a_1..a_g, b_1..b_g and their central bracket.
inline Integer bc_h_dims(int g, int i, int k) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  if (0 <= i && i <= g && i == k) return ext_binom(2 * g, i) - ext_binom(2 * g, i - 2);
  if (g + 1 <= i && i <= 2 * g + 1 && i == k - 1) return ext_binom(2 * g, i - 1) - ext_binom(2 * g, i + 1);
  return 0;
}

/// dim_{i,k} of W_{g,n} = Sym(p, a~_r, b~_r, u_s, u~_s).
inline Integer w_dims(int g, int n, int i, int k) {
  if (g < 0 || n < 1) throw std::invalid_argument("need g >= 0, n >= 1");
  if (i < 0 || i > k) return 0;
  Integer total = 0;
  for (int l = 0; l <= i / 2; ++l) total += ext_binom(n + i - 2 * l - 2, n - 2) * ext_binom(2 * g + l - 1, 2 * g - 1);
  return total;
}

/// beta_i(B_k(Sigma_{g,n})), n >= 1.
inline BettiValue betti_open_orientable(int g, int n, int i, int k) {
  if (g < 0 || n < 1 || i < 0 || k < 0) throw std::invalid_argument("need g >= 0, n >= 1, i >= 0, k >= 0");
  if (i > k) return BettiValue(0L);
  Integer total = 0;
  for (int j = 0; j <= g; ++j) {
    const Integer outer = ext_binom(2 * g, j) - ext_binom(2 * g, j - 2);
    Integer inner = 0;
    for (int l = 0; 2 * l <= i - j; ++l) {
      Integer bracket = ext_binom(n + i - j - 2 * l - 2, n - 2);
      if (i <= k - 1) bracket += ext_binom(n + i + j - 2 * g - 2 * l - 3, n - 2);
      inner += ext_binom(2 * g + l - 1, 2 * g - 1) * bracket;
    }
    total += outer * inner;
  }
  return detail::betti(total);
}

/// dim_i(K_g) by the closed form: special cases for i <= 2, the (j, m)
/// double sum for i >= 3.
inline Integer K_dims_formula(int g, int i) {
  if (g < 0 || i < 0) throw std::invalid_argument("need g >= 0, i >= 0");
  if (i == 0) return 1;
  if (i == 1) return 0;
  if (i == 2) return 2 * g;
  return detail::integral(detail::genus_double_sum(g, i, -1, -1), "K_dims_formula");
}

/// dim_i(K_g) = binom(2g+i-3, i-1), valid for 3 <= i <= g+2.
inline Integer K_dims_high_genus(int g, int i) {
  if (i < 3 || i > g + 2) throw std::invalid_argument("high-genus form needs 3 <= i <= g+2");
  return ext_binom(2 * g + i - 3, i - 1);
}

/// beta_i(B_{i-1}(Sigma_g)), i >= 1.
inline BettiValue betti_closed_unstable_top(int g, int i) {
  if (g < 0 || i < 1) throw std::invalid_argument("need g >= 0, i >= 1");
  switch (i) {
    case 1: return BettiValue(0L);
    case 2: return BettiValue(1L);
    case 3: return BettiValue(0L);
    case 4: return BettiValue(2L * g);
    default: break;
  }
  return detail::betti(detail::integral(detail::genus_double_sum(g, i, -5, -1), "betti_closed_unstable_top"));
}

/// beta_i(B_i(Sigma_g)).
inline BettiValue betti_closed_unstable_diag(int g, int i) {
  if (g < 0 || i < 0) throw std::invalid_argument("need g >= 0, i >= 0");
  const Integer G = g;
  switch (i) {
    case 0: return BettiValue(1L);
    case 1: return BettiValue(2L * g);
    case 2: return detail::betti(2 * G * G - G);
    case 3:
      if (g == 1) return BettiValue(4L);
      return detail::betti(exact_div(4 * G * G * G - G + 3, 3, "beta_3(B_3)"));
    case 4:
      if (g == 0) return BettiValue(0L);
      if (g == 1) return BettiValue(4L);
      if (g == 2) return BettiValue(24L);
      return detail::betti(exact_div(4 * G * G * G * G + 4 * G * G * G - G * G + 11 * G, 6, "beta_4(B_4)"));
    default: break;
  }
  const Rational sum = detail::genus_double_sum(g, i, 1, 1) + detail::genus_double_sum(g, i, -3, 1) +
                       detail::genus_double_sum(g, i, -5, -1);
  return detail::betti(-ext_binom(2 * g + i - 4, 2 * g - 2) + detail::integral(sum, "betti_closed_unstable_diag"));
}

/// Stable Betti number beta_i(B_k(Sigma_g)), any k > i.
inline BettiValue betti_closed_stable(int g, int i) {
  if (g < 0 || i < 0) throw std::invalid_argument("need g >= 0, i >= 0");
  const Integer G = g;
  switch (i) {
    case 0: return BettiValue(1L);
    case 1: return BettiValue(2L * g);
    case 2:
      if (g == 0) return BettiValue(0L);
      if (g == 1) return BettiValue(3L);
      return detail::betti(2 * G * G - G);
    case 3:
      if (g == 0) return BettiValue(1L);
      if (g == 1) return BettiValue(5L);
      if (g == 2) return BettiValue(16L);
      return detail::betti(exact_div(4 * G * G * G - G + 3, 3, "beta_3^st"));
    case 4:
      if (g == 0) return BettiValue(0L);
      if (g == 1) return BettiValue(7L);
      if (g == 2) return BettiValue(28L);
      if (g == 3) return BettiValue(90L);
      return detail::betti(exact_div(4 * G * G * G * G + 4 * G * G * G - G * G + 11 * G, 6, "beta_4^st"));
    default: break;
  }
  const Rational sum = detail::genus_double_sum(g, i, 3, -1) + detail::genus_double_sum(g, i, 1, 1) +
                       detail::genus_double_sum(g, i, -3, 1) + detail::genus_double_sum(g, i, -5, -1);
  return detail::betti(-ext_binom(2 * g + i - 1, 2 * g - 2) - ext_binom(2 * g + i - 4, 2 * g - 2) +
                       detail::integral(sum, "betti_closed_stable"));
}

/// beta_i(B_k(Sigma_g)) in the genus-stable range 5 <= i <= g.
inline BettiValue betti_genus_stable(int g, int i, int k) {
  if (i < 5 || i > g) throw std::out_of_range("outside genus-stable range");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (i <= k) return detail::betti(ext_binom(2 * g + i - 2, i) + ext_binom(2 * g + i - 5, i - 3));
  if (i == k + 1) return detail::betti(ext_binom(2 * g + i - 5, i - 3));
  return BettiValue(0L);
}

}  // namespace confbetti
