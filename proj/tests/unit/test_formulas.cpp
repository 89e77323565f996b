#include <gtest/gtest.h>

#include "confbetti/ce.hpp"
#include "confbetti/formulas.hpp"

using namespace confbetti;

namespace {

// CE complex of the Lie algebra on a_j, b_j (degree 1, weight 1) and p~
// (degree 1, weight 2) with [a_j, b_j] = p~, built directly from its brackets.
std::size_t heisenberg_homology(int g, int i, int k) {
  std::vector<GeneratorSpec> gens;
  for (int j = 1; j <= g; ++j) {
    gens.push_back({"a" + std::to_string(j), 1, 1});
    gens.push_back({"b" + std::to_string(j), 1, 1});
  }
  gens.push_back({"p~", 1, 2});
  std::vector<Bracket> brackets;
  for (int j = 0; j < g; ++j) brackets.push_back({static_cast<std::size_t>(2 * j), static_cast<std::size_t>(2 * j + 1), {{gens.size() - 1, Rational(1)}}});
  const CESpec spec(gens, brackets);
  const int top = spec.top_degree(k);
  if (i > top) return 0;
  WeightSlice slice(spec, k, std::min(i + 1, top), {});
  return slice.homology(i, i + 1 > top);
}

// Monomials of degree i and weight k in Sym(p, a~_r, b~_r, u_s, u~_s).
std::size_t w_count(int g, int n, int i, int k) {
  std::vector<GeneratorSpec> gens{{"p", 0, 1}};
  for (int r = 1; r <= g; ++r) {
    gens.push_back({"a~", 2, 2});
    gens.push_back({"b~", 2, 2});
  }
  for (int s = 1; s < n; ++s) {
    gens.push_back({"u", 1, 1});
    gens.push_back({"u~", 2, 2});
  }
  return enumerate_block(gens, i, k, 1000000).size();
}

}  // namespace

TEST(ClosedNonorientable, Examples) {
  EXPECT_EQ(betti_closed_nonorientable(1, 3, 5).value(), 1);
  EXPECT_EQ(betti_closed_nonorientable(2, 1, 2).value(), 1);
  EXPECT_EQ(betti_closed_nonorientable(3, 7, 2).value(), 0);
  for (int k = 0; k <= 6; ++k) {
    for (int i = 0; i <= k + 2; ++i) {
      const int expect = (i == 0 && i <= k) || (i == 3 && i <= k + 1) ? 1 : 0;
      EXPECT_EQ(betti_closed_nonorientable(1, i, k).value(), expect) << i << "," << k;
    }
  }
}

TEST(OpenNonorientable, ExamplesAndPunctureShuffle) {
  EXPECT_EQ(betti_open_nonorientable(1, 1, 1, 2).value(), 1);
  EXPECT_EQ(betti_open_nonorientable(1, 1, 2, 5).value(), 0);
  for (int h = 1; h <= 4; ++h) {
    for (int n = 2; n <= 4; ++n) {
      for (int k = 0; k <= 8; ++k) {
        for (int i = 0; i <= 9; ++i) {
          EXPECT_EQ(betti_open_nonorientable(h, n, i, k), betti_open_nonorientable(h + 1, n - 1, i, k));
        }
      }
    }
  }
}

TEST(BodigheimerCohen, Examples) {
  EXPECT_EQ(bc_h_dims(1, 1, 1), 2);
  EXPECT_EQ(bc_h_dims(1, 2, 3), 2);
  for (int i = 2; i <= 6; ++i) {
    for (int k = 0; k <= 7; ++k) EXPECT_EQ(bc_h_dims(0, i, k), 0);
  }
}

TEST(BodigheimerCohen, MatchesBruteForceHomology) {
  for (int g = 0; g <= 3; ++g) {
    for (int k = 0; k <= 7; ++k) {
      for (int i = 0; i <= 7; ++i) {
        EXPECT_EQ(bc_h_dims(g, i, k), static_cast<long>(heisenberg_homology(g, i, k))) << g << "," << i << "," << k;
      }
    }
  }
}

TEST(WDims, ExamplesAndMonomialCount) {
  EXPECT_EQ(w_dims(0, 1, 0, 0), 1);
  for (int i = 0; i <= 6; ++i) EXPECT_EQ(w_dims(0, 2, i, i + 1), 1);
  EXPECT_EQ(w_dims(1, 1, 2, 2), 2);
  EXPECT_EQ(w_dims(1, 1, 2, 5), 2);
  for (int g = 0; g <= 2; ++g) {
    for (int n = 1; n <= 3; ++n) {
      for (int k = 0; k <= 7; ++k) {
        for (int i = 0; i <= k; ++i) {
          EXPECT_EQ(w_dims(g, n, i, k), static_cast<long>(w_count(g, n, i, k))) << g << "," << n << "," << i << "," << k;
        }
        EXPECT_EQ(w_dims(g, n, k + 1, k), 0);
      }
    }
  }
}

TEST(OpenOrientable, Examples) {
  for (int k = 2; k <= 6; ++k) EXPECT_EQ(betti_open_orientable(0, 1, 1, k).value(), 1);
  EXPECT_EQ(betti_open_orientable(0, 1, 1, 1).value(), 0);
  EXPECT_EQ(betti_open_orientable(1, 1, 1, 1).value(), 2);
  EXPECT_EQ(betti_open_orientable(2, 3, 5, 4).value(), 0);
}

TEST(KDims, Examples) {
  EXPECT_EQ(K_dims_formula(1, 3), 1);
  EXPECT_EQ(K_dims_formula(5, 4), 165);
  EXPECT_EQ(K_dims_high_genus(5, 4), 165);
  for (int g = 0; g <= 6; ++g) EXPECT_EQ(K_dims_formula(g, 2), 2 * g);
}

TEST(KDims, PartsAgreeAndStayIntegral) {
  for (int g = 0; g <= 20; ++g) {
    for (int i = 3; i <= g + 2; ++i) EXPECT_EQ(K_dims_formula(g, i), K_dims_high_genus(g, i)) << g << "," << i;
    for (int i = 0; i <= 40; ++i) EXPECT_GE(K_dims_formula(g, i), 0);
  }
}

TEST(ClosedOrientable, SpecialCaseExamples) {
  for (int g = 0; g <= 5; ++g) EXPECT_EQ(betti_closed_unstable_top(g, 4).value(), 2 * g);
  EXPECT_EQ(betti_closed_unstable_top(0, 2).value(), 1);
  EXPECT_EQ(betti_closed_unstable_top(1, 6).value(), 3);
  EXPECT_EQ(betti_closed_unstable_diag(2, 4).value(), 24);
  EXPECT_EQ(betti_closed_unstable_diag(1, 3).value(), 4);
  EXPECT_EQ(betti_closed_unstable_diag(2, 2).value(), 6);
  EXPECT_EQ(betti_closed_stable(2, 3).value(), 16);
  EXPECT_EQ(betti_closed_stable(6, 43).str(), "66446126460");
  EXPECT_EQ(betti_closed_stable(3, 4).value(), 90);
}

TEST(GenusStable, ExamplesAndWindow) {
  EXPECT_EQ(betti_genus_stable(10, 5, 9).value(), 33839);
  // i = k+1 gives C(2g+i-5, i-3) = C(12, 2), which must match the top unstable value.
  EXPECT_EQ(betti_genus_stable(6, 5, 4).value(), 66);
  EXPECT_EQ(betti_genus_stable(6, 5, 4), betti_closed_unstable_top(6, 5));
  EXPECT_EQ(betti_genus_stable(8, 5, 3).value(), 0);
  try {
    betti_genus_stable(4, 5, 9);
    FAIL();
  } catch (const std::out_of_range& e) {
    EXPECT_STREQ(e.what(), "outside genus-stable range");
  }
  for (int g = 5; g <= 20; ++g) {
    for (int i = 5; i <= g; ++i) {
      EXPECT_EQ(betti_genus_stable(g, i, i + 3), betti_closed_stable(g, i));
      EXPECT_EQ(betti_genus_stable(g, i, i), betti_closed_unstable_diag(g, i));
      EXPECT_EQ(betti_genus_stable(g, i, i - 1), betti_closed_unstable_top(g, i));
    }
  }
}
