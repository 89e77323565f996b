#include <gtest/gtest.h>

#include "confbetti/ce.hpp"

using namespace confbetti;

namespace {

std::vector<std::string> names(const CESpec& spec) {
  std::vector<std::string> out;
  for (const auto& g : spec.generators()) out.push_back(g.name);
  return out;
}

Chain D(const CESpec& spec, const std::vector<std::pair<std::string, int>>& factors) {
  Monomial m(spec.generators().size(), 0);
  for (const auto& [n, e] : factors) m[spec.index_of(n)] = e;
  return apply(spec.generators(), spec.differential(), m);
}

Chain chain_of(const CESpec& spec, const std::string& name, const Rational& c = 1) {
  Monomial m(spec.generators().size(), 0);
  m[spec.index_of(name)] = 1;
  return {{m, c}};
}

std::vector<Surface> test_surfaces() {
  return {Surface::closed_orientable(0), Surface::closed_orientable(1), Surface::closed_orientable(2),
          Surface::open_orientable(0, 1), Surface::open_orientable(1, 2), Surface::open_orientable(2, 1),
          Surface::closed_nonorientable(1), Surface::closed_nonorientable(3), Surface::open_nonorientable(2, 2)};
}

}  // namespace

TEST(CESpec, SurfaceGenerators) {
  const auto sphere = surface_ce_spec(Surface::closed_orientable(0));
  EXPECT_EQ(names(sphere), (std::vector<std::string>{"p", "v", "p~", "v~"}));
  EXPECT_EQ(sphere.brackets().size(), 2u);
  EXPECT_EQ(names(surface_ce_spec(Surface::closed_nonorientable(1))), (std::vector<std::string>{"p", "v~"}));
  EXPECT_TRUE(surface_ce_spec(Surface::closed_nonorientable(1)).brackets().empty());
  EXPECT_EQ(names(surface_ce_spec(Surface::open_orientable(0, 1))), (std::vector<std::string>{"p", "p~"}));
  EXPECT_EQ(names(surface_ce_spec(Surface::closed_orientable(1))),
            (std::vector<std::string>{"p", "a1", "b1", "v", "p~", "a1~", "b1~", "v~"}));
  EXPECT_EQ(names(surface_ce_spec(Surface::open_nonorientable(2, 2))),
            (std::vector<std::string>{"p", "u1", "u2", "u3", "u1~", "u2~"}));
  EXPECT_EQ(surface_ce_spec(Surface::open_orientable(2, 3)).brackets().size(), 2u);
}

TEST(CESpec, RejectsMalformedBrackets) {
  std::vector<GeneratorSpec> gens{{"x", 1, 1}, {"y", 1, 1}, {"z", 2, 2}};
  EXPECT_THROW(CESpec(gens, {Bracket{0, 1, {{2, Rational(1)}}}}), std::invalid_argument);  // wrong degree
  EXPECT_THROW(CESpec(gens, {Bracket{0, 0, {}}}), std::invalid_argument);                    // odd square
  EXPECT_THROW(CESpec(gens, {Bracket{1, 0, {}}}), std::invalid_argument);                    // order
}

TEST(CEDifferential, Examples) {
  const auto sphere = surface_ce_spec(Surface::closed_orientable(0));
  EXPECT_EQ(D(sphere, {{"p", 1}, {"v", 1}}), chain_of(sphere, "p~"));
  EXPECT_EQ(D(sphere, {{"v", 2}}), chain_of(sphere, "v~"));
  const auto torus = surface_ce_spec(Surface::closed_orientable(1));
  EXPECT_EQ(D(torus, {{"a1", 1}, {"b1", 1}}), chain_of(torus, "p~"));
  const auto n3 = surface_ce_spec(Surface::closed_nonorientable(3));
  EXPECT_TRUE(D(n3, {{"p", 2}, {"u1", 1}, {"u2", 1}}).empty());
}

TEST(CEDifferential, SquareOfEvenGeneratorCountsPairs) {
  // D(p v^m) has the v~ coefficient binom(m, 2) on p v^{m-2} v~.
  const auto sphere = surface_ce_spec(Surface::closed_orientable(0));
  for (int m = 2; m <= 6; ++m) {
    const Chain out = D(sphere, {{"p", 1}, {"v", m}});
    Monomial target(4, 0);
    target[sphere.index_of("p")] = 1;
    target[sphere.index_of("v")] = m - 2;
    target[sphere.index_of("v~")] = 1;
    EXPECT_EQ(out.at(target), Rational(ext_binom(m, 2)));
  }
}

TEST(CEBasis, Blocks) {
  const auto sphere = surface_ce_spec(Surface::closed_orientable(0));
  const auto blocks = enumerate_basis(sphere, 3, 3);
  EXPECT_EQ(blocks.at(GradedIndex(2, 2)).size(), 1u);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(blocks.at(GradedIndex(0, k)).size(), 1u);
  const auto torus = surface_ce_spec(Surface::closed_orientable(1));
  EXPECT_EQ(enumerate_basis(torus, 1, 1).at(GradedIndex(1, 1)).size(), 2u);
}

TEST(CEOracle, Examples) {
  EXPECT_EQ(betti_oracle(Surface::closed_orientable(0), 3, 3).at(GradedIndex(3, 3)).value(), 1);
  EXPECT_EQ(betti_oracle(Surface::closed_orientable(1), 1, 1).at(GradedIndex(1, 1)).value(), 2);
  EXPECT_EQ(betti_oracle(Surface::closed_nonorientable(1), 3, 4).at(GradedIndex(3, 4)).value(), 1);
  EXPECT_EQ(betti_oracle(Surface::closed_orientable(0), 2, 2).at(GradedIndex(2, 2)).value(), 0);
}

TEST(CEOracle, SquareZeroAndWeightPreserved) {
  for (const auto& s : test_surfaces()) {
    const CESpec spec = surface_ce_spec(s);
    for (int k = 0; k <= 5; ++k) {
      const int top = std::min(spec.top_degree(k), 9);
      WeightSlice slice(spec, k, top, {});
      for (int i = 2; i <= top; ++i) EXPECT_TRUE((slice.d_out(i - 1) * slice.d_out(i)).is_zero()) << s.name();
      for (int i = 1; i <= top; ++i) {
        for (std::size_t c = 0; c < slice.block(i).size(); ++c) {
          for (const auto& [m, v] : apply(spec.generators(), spec.differential(), slice.block(i).monomials[c])) {
            EXPECT_EQ(monomial_weight(spec.generators(), m), k);
            EXPECT_EQ(monomial_degree(spec.generators(), m), i - 1);
          }
        }
      }
    }
  }
}

TEST(CEOracle, EulerCharacteristicPerWeight) {
  for (const auto& s : test_surfaces()) {
    const CESpec spec = surface_ce_spec(s);
    for (int k = 0; k <= 4; ++k) {
      const auto e = euler_characteristics(spec, k);
      EXPECT_EQ(e.from_homology, e.from_chains) << s.name() << " k=" << k;
    }
  }
}

TEST(CEOracle, CapNamesBlock) {
  OracleLimits tight;
  tight.max_block_dim = 2;
  try {
    betti_oracle(Surface::closed_orientable(2), 4, 4, tight);
    FAIL();
  } catch (const std::length_error& e) {
    EXPECT_NE(std::string(e.what()).find("block (i,k)"), std::string::npos);
  }
}
