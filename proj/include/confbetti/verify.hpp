#pragma once

// Verification suites shared by the CLI and the acceptance binary: table
// fixtures, the CE oracle grid, and recurrence/identity checks.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ce.hpp"
#include "engine.hpp"
#include "operators.hpp"
#include "render.hpp"
#include "report.hpp"

namespace confbetti {

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

namespace detail {

inline void compare_lines(CheckReport& report, const std::string& name, const std::string& expected,
                          const std::string& got) {
  if (expected == got) {
    report.add(name, true);
    return;
  }
  const auto e = parse_csv(expected), g = parse_csv(got);
  std::string detail = "outputs differ";
  for (std::size_t r = 0; r < std::max(e.size(), g.size()); ++r) {
    const auto line = [](const std::vector<std::vector<std::string>>& t, std::size_t r) {
      if (r >= t.size()) return std::string("<missing>");
      std::string s;
      for (std::size_t c = 0; c < t[r].size(); ++c) s += (c ? "," : "") + t[r][c];
      return s;
    };
    if (line(e, r) != line(g, r)) {
      detail = "row " + std::to_string(r) + ": expected " + line(e, r) + " got " + line(g, r);
      break;
    }
  }
  report.add(name, false, detail);
}

}  // namespace detail

/// The stable Betti table (g <= 6, i <= 43) through both computation
/// paths, cross-path agreement entry by entry, and anchor values.
inline CheckReport verify_stable_figure(const std::filesystem::path& data_dir) {
  CheckReport report;
  const std::string fixture = read_text_file(data_dir / "stable_table.csv");
  const TextTable by_series = stable_table(6, 43, StablePath::Series);
  const TextTable by_formula = stable_table(6, 43, StablePath::Formula);
  detail::compare_lines(report, "stable table (series) matches stable_table.csv", fixture,
                        render_table(by_series, OutputFormat::Csv));
  detail::compare_lines(report, "stable table (formula) matches stable_table.csv", fixture,
                        render_table(by_formula, OutputFormat::Csv));
  std::string bad;
  for (std::size_t r = 0; r < by_series.rows.size() && bad.empty(); ++r) {
    for (std::size_t c = 1; c < by_series.rows[r].size(); ++c) {
      if (by_series.rows[r][c] != by_formula.rows[r][c]) {
        bad = "(Sigma_" + std::to_string(c - 1) + ", i=" + std::to_string(r) + ") series " + by_series.rows[r][c] +
              " formula " + by_formula.rows[r][c];
        break;
      }
    }
  }
  report.add("series and formula paths agree", bad.empty(), bad);
  struct Anchor {
    int g, i;
    const char* value;
  };
  for (const Anchor& a : {Anchor{6, 43, "66446126460"}, Anchor{2, 3, "16"}, Anchor{3, 4, "90"}}) {
    const auto r = betti(Surface::closed_orientable(a.g), a.i, a.i + 7);
    report.add("anchor beta_" + std::to_string(a.i) + "^st(Sigma_" + std::to_string(a.g) + ") = " + a.value,
               r.value.str() == a.value, "got " + r.value.str());
  }
  return report;
}

/// The 24 fixed-genus polynomials for g <= 3 and the genus-5 even stable polynomial.
inline CheckReport verify_polynomial_figure(const std::filesystem::path& data_dir) {
  CheckReport report;
  detail::compare_lines(report, "fixed-genus polynomials match genus_polynomials.csv",
                        read_text_file(data_dir / "genus_polynomials.csv"), render_table(polynomial_table(3), OutputFormat::Csv));
  const auto rows = parse_csv(read_text_file(data_dir / "qst5.csv"));
  const FittedPolynomial q = polynomial_fit(5, PolynomialFamily::Stable, Parity::Even);
  std::vector<Rational> expected(10);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    Rational c(rows[r].at(1));
    c.canonicalize();
    expected.at(std::stoul(rows[r].at(0))) = c;
  }
  std::string got = render_polynomial(q.coefficients), want = render_polynomial(expected);
  report.add("q^st_5 matches qst5.csv", q.coefficients == expected, "expected " + want + " got " + got);
  report.add("q^st_5 leading coefficient 1/368640", q.degree() == 9 && q.coefficients[9] == Rational(1, 368640));
  return report;
}

inline CheckReport verify_figures(const std::filesystem::path& data_dir) {
  CheckReport report = verify_stable_figure(data_dir);
  report.append(verify_polynomial_figure(data_dir));
  return report;
}

/// A surface with the largest weight the oracle grid visits for it.
struct GridEntry {
  Surface surface;
  int max_k;
};

/// Closed orientable surfaces of genus <= max_g up to weight max_k; every
/// other listed surface with genus <= max_g up to weight max_k + 2.
inline std::vector<GridEntry> oracle_grid(int max_g, int max_k) {
  std::vector<GridEntry> grid;
  for (int g = 0; g <= max_g; ++g) grid.push_back({Surface::closed_orientable(g), max_k});
  for (int h = 1; h <= 4; ++h) grid.push_back({Surface::closed_nonorientable(h), max_k + 2});
  for (auto [h, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) grid.push_back({Surface::open_nonorientable(h, n), max_k + 2});
  for (auto [g, n] : {std::pair{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 1}}) {
    if (g <= max_g) grid.push_back({Surface::open_orientable(g, n), max_k + 2});
  }
  return grid;
}

/// `betti` against the CE oracle on every (i, k) with k <= max_k, i <= k+1,
/// plus vanishing above degree k+1 (closed) or k (open) and stability in k.
inline CheckReport verify_oracle_entry(const GridEntry& e, const OracleLimits& limits = {}) {
  CheckReport report;
  const Surface& s = e.surface;
  const BettiTable oracle = betti_oracle(s, e.max_k + 1, e.max_k, limits);
  std::string bad;
  for (int k = 0; k <= e.max_k && bad.empty(); ++k) {
    for (int i = 0; i <= k + 1; ++i) {
      const BettiValue& expected = oracle.at(GradedIndex(i, k));
      const auto got = betti(s, i, k);
      if (!(expected == got.value)) {
        bad = "(" + s.name() + ", i=" + std::to_string(i) + ", k=" + std::to_string(k) + ", expected " +
              expected.str() + ", got " + got.value.str() + ", " + to_string(got.provenance) + ")";
        break;
      }
    }
  }
  report.add("oracle equals betti on " + s.name() + " k<=" + std::to_string(e.max_k), bad.empty(), bad);

  // Closed surfaces can carry a class in degree k+1 (N_1 already has
  // beta_3(B_2) = 1); open surfaces stop at degree k.
  const int top = s.closed() ? 1 : 0;
  bad.clear();
  for (const auto& [idx, entry] : oracle.entries()) {
    if (idx.i > idx.k + top && entry.value.value() != 0) {
      bad = "(i,k)=(" + std::to_string(idx.i) + "," + std::to_string(idx.k) + ") = " + entry.value.str();
      break;
    }
  }
  report.add("oracle vanishes for i > k+" + std::to_string(top) + " on " + s.name(), bad.empty(), bad);

  // For fixed i the value is constant once k > i.
  bad.clear();
  for (int i = 0; i + 1 <= e.max_k && bad.empty(); ++i) {
    const BettiValue& first = oracle.at(GradedIndex(i, i + 1));
    for (int k = i + 2; k <= e.max_k; ++k) {
      if (!(oracle.at(GradedIndex(i, k)) == first)) {
        bad = "i=" + std::to_string(i) + ": k=" + std::to_string(i + 1) + " gives " + first.str() + ", k=" +
              std::to_string(k) + " gives " + oracle.at(GradedIndex(i, k)).str();
        break;
      }
    }
  }
  report.add("oracle stable for k > i on " + s.name(), bad.empty(), bad);
  return report;
}

inline CheckReport verify_oracle(int max_g, int max_k, const OracleLimits& limits = {}) {
  CheckReport report;
  for (const auto& e : oracle_grid(max_g, max_k)) report.append(verify_oracle_entry(e, limits));
  return report;
}

/// Series recurrences and formula/series agreement for g <= max_g, and the
/// X_g operator identities for g <= min(max_g, 2) up to operator_degree.
inline CheckReport verify_recurrences(int max_g, int trunc, int operator_degree, const OracleLimits& limits = {}) {
  CheckReport report;
  for (int g = 0; g <= max_g; ++g) {
    CheckBounds b;
    b.series_trunc = trunc;
    b.limits = limits;
    report.append(consistency_check(g, b));
  }
  for (int g = 0; g <= std::min(max_g, 2); ++g) report.append(operator_identities(g, operator_degree, limits));
  return report;
}

}  // namespace confbetti
