#include <gtest/gtest.h>

#include <random>

#include "confbetti/series.hpp"

using namespace confbetti;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int trunc) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<Rational> c(trunc + 1);
  for (auto& x : c) x = Rational(coeff(rng), 1 + (coeff(rng) + 9) % 4);
  for (auto& x : c) x.canonicalize();
  return TruncatedSeries(c, trunc);
}

}  // namespace

TEST(Series, ProductAndShiftExamples) {
  const TruncatedSeries a({1, 1}, 4), b({1, -1}, 4);
  EXPECT_EQ(render(a * b), "1 - t^2");
  EXPECT_EQ(render(TruncatedSeries({0, 0, 1, 1}, 5).shift(-2)), "1 + t");
  EXPECT_THROW(TruncatedSeries({1, 1}, 3).shift(-1), std::domain_error);
}

TEST(Series, ShiftErrorMessage) {
  try {
    TruncatedSeries({1, 1}, 3).shift(-1);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "inexact division by t");
  }
}

TEST(Series, GeometricPower) {
  EXPECT_EQ(render(geometric_power(2, 4)), "1 + 2*t + 3*t^2 + 4*t^3 + 5*t^4");
  EXPECT_EQ(render(geometric_power(0, 5)), "1");
  EXPECT_EQ(X_series(0, 12), TruncatedSeries::one(12));
  for (int g = 1; g <= 4; ++g) {
    const auto X = X_series(g, 12);
    for (int i = 0; i <= 12; ++i) EXPECT_EQ(X.coefficient(i), Rational(ext_binom(2 * g + i - 1, i)));
  }
}

TEST(Series, GeometricPowerIsInverseOfBinomialPolynomial) {
  // (1-t)^m * 1/(1-t)^m = 1, with (1-t)^m expanded independently.
  for (int m = 0; m <= 7; ++m) {
    std::vector<Rational> c(m + 1);
    for (int j = 0; j <= m; ++j) c[j] = Rational(ext_binom(m, j) * (j % 2 ? -1 : 1));
    const TruncatedSeries one_minus_t_pow(c, 15);
    EXPECT_EQ(one_minus_t_pow * geometric_power(m, 15), TruncatedSeries::one(15));
  }
}

TEST(Series, StandardSeries) {
  for (int i = 0; i <= 10; ++i) EXPECT_EQ(X_series(1, 10).coefficient(i), Rational(i + 1));
  EXPECT_EQ(render(S_series(6)), "1 + 2*t^2 + 3*t^4 + 4*t^6");
  EXPECT_EQ(render(X_series(0, 6)), "1");
}

TEST(Series, Coefficient) {
  EXPECT_EQ(coefficient(TruncatedSeries({1, 2}, 3), 1), Rational(2));
  EXPECT_EQ(coefficient(X_series(3, 5), 2), Rational(21));
  EXPECT_THROW(coefficient(X_series(3, 5), 6), std::out_of_range);
}

TEST(Series, TruncationIsMinimum) {
  const TruncatedSeries a = X_series(1, 4), b = X_series(1, 9);
  EXPECT_EQ((a + b).trunc(), 4);
  EXPECT_EQ((a * b).trunc(), 4);
  EXPECT_EQ(series_scale(b, Rational(1, 2)).trunc(), 9);
}

TEST(Series, RingAxiomsProperty) {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 40; ++rep) {
    const int T = 1 + rep % 9;
    const auto a = random_series(rng, T), b = random_series(rng, T), c = random_series(rng, T);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * TruncatedSeries::one(T), a);
    // Dividing by t^3 drops three orders of precision.
    if (T >= 3) EXPECT_EQ(series_shift(series_shift(a, 3), -3), a.truncated(T - 3));
    else EXPECT_THROW(series_shift(series_shift(a, 3), -3), std::domain_error);
  }
}

// P_H = P_ker + t^{-1}(P_ker - P_V) for a complex with differential of degree -1.
TEST(Series, HomologyPoincareIdentity) {
  // Koszul-type complex on Q[x] (x) Lambda[y] with |x| = 2, |y| = 5, d(y) = x^2:
  // dims and ranks in degree j are read off by hand.
  const int T = 16;
  std::vector<Rational> dim(T + 2), ker(T + 2), hom(T + 2);
  for (int j = 0; j <= T + 1; ++j) {
    const bool even = j % 2 == 0;        // x^{j/2}
    const bool odd = j >= 5 && !even;    // x^{(j-5)/2} y
    dim[j] = Rational(even + odd);
    ker[j] = Rational(even);             // d(x^a y) = x^{a+2} != 0
    const bool boundary = even && j >= 4;  // x^{a} with a >= 2
    hom[j] = ker[j] - Rational(boundary);
  }
  const TruncatedSeries V(dim, T + 1), K(ker, T + 1), H(hom, T + 1);
  const TruncatedSeries rhs = K + (K - V).shift(-1);
  EXPECT_EQ(H.truncated(T), rhs);
}

TEST(Series, Render) {
  EXPECT_EQ(render(TruncatedSeries(3)), "0");
  std::vector<Rational> c{Rational(1), Rational(2), Rational(-1, 2)};
  EXPECT_EQ(render(TruncatedSeries(c, 2)), "1 + 2*t - 1/2*t^2");
}
