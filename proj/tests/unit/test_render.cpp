#include <gtest/gtest.h>

#include "confbetti/render.hpp"
#include "confbetti/verify.hpp"

using namespace confbetti;

TEST(RenderPolynomial, NormalizedFraction) {
  EXPECT_EQ(render_polynomial(std::vector<Rational>{}), "0");
  EXPECT_EQ(render_polynomial({Rational(-1), Rational(2)}), "2i-1");
  EXPECT_EQ(render_polynomial({Rational(9, 8), Rational(10, 8), Rational(3, 8), Rational(2, 8)}),
            "(2i^3+3i^2+10i+9)/8");
  EXPECT_EQ(render_polynomial({Rational(0), Rational(1, 2)}), "(i)/2");
  EXPECT_EQ(render_polynomial({Rational(-420, 384), Rational(1, 384), Rational(32, 384), Rational(-2, 384),
                               Rational(4, 384), Rational(1, 384)}),
            "(i^5+4i^4-2i^3+32i^2+i-420)/384");
  EXPECT_EQ(render_polynomial({Rational(0), Rational(0), Rational(-1)}, "x"), "-x^2");
}

TEST(RenderPolynomial, TableExamples) {
  EXPECT_EQ(render_polynomial(polynomial_fit(1, PolynomialFamily::Stable, Parity::Even)), "2i-1");
  EXPECT_EQ(render_polynomial(polynomial_fit(3, PolynomialFamily::Top, Parity::Odd)), "(i^5+4i^4-2i^3+32i^2+i-420)/384");
  EXPECT_EQ(render_polynomial(polynomial_fit(2, PolynomialFamily::Diagonal, Parity::Even)), "(3i^3+4i^2+28i)/16");
}

TEST(RenderTable, Formats) {
  const TextTable t{{"i", "0", "1"}, {{"0", "1", "1"}, {"1", "0", "2"}}};
  EXPECT_EQ(render_table(t, OutputFormat::Csv), "i,0,1\n0,1,1\n1,0,2\n");
  EXPECT_EQ(render_table(t, OutputFormat::Plain), "i  0  1\n0  1  1\n1  0  2\n");
  EXPECT_EQ(render_table(t, OutputFormat::Markdown), "| i | 0 | 1 |\n| --- | --- | --- |\n| 0 | 1 | 1 |\n| 1 | 0 | 2 |\n");
  const auto j = nlohmann::json::parse(render_table(t, OutputFormat::Json));
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["1"], "2");
}

TEST(StableTable, SmallCases) {
  const auto sphere = stable_table(0, 5);
  std::vector<std::string> col;
  for (const auto& r : sphere.rows) col.push_back(r[1]);
  EXPECT_EQ(col, (std::vector<std::string>{"1", "0", "0", "1", "0", "0"}));
  const auto torus = stable_table(1, 4, StablePath::Formula);
  col.clear();
  for (const auto& r : torus.rows) col.push_back(r[2]);
  EXPECT_EQ(col, (std::vector<std::string>{"1", "2", "3", "5", "7"}));
}

TEST(StableTable, Deterministic) {
  EXPECT_EQ(render_table(stable_table(4, 20), OutputFormat::Csv), render_table(stable_table(4, 20), OutputFormat::Csv));
}

TEST(StableTable, FixtureByteIdentical) {
  const std::string fixture = read_text_file(std::filesystem::path(CONFBETTI_DATA_DIR) / "stable_table.csv");
  EXPECT_EQ(render_table(stable_table(6, 43, StablePath::Series), OutputFormat::Csv), fixture);
  EXPECT_EQ(render_table(stable_table(6, 43, StablePath::Formula), OutputFormat::Csv), fixture);
}

TEST(Json, BettiSchema) {
  const auto j = betti_json(Surface::open_orientable(1, 2), 3, 4, BettiValue(Integer("123456789012345678901")),
                            Provenance::Formula);
  EXPECT_EQ(j.dump(),
            R"({"surface":{"kind":"OpenOrientable","name":"Sigma_{1,2}","genus":1,"punctures":2},"i":3,"k":4,)"
            R"("betti":"123456789012345678901","provenance":"formula"})");
}

TEST(Json, SeriesAndCeBlock) {
  EXPECT_EQ(series_json(V_series(0, 1, 4)).dump(), R"(["1","0","0","1","0"])");
  const auto j = ce_block_json(Surface::closed_orientable(0), 2, 2);
  EXPECT_EQ(j["basis"].size(), 1u);
  EXPECT_EQ(j["basis"][0], "p*v");
  EXPECT_EQ(j["target_basis"][0], "p~");
  EXPECT_EQ(j["differential"].dump(), R"([[0,0,"1"]])");
}
