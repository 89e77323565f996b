#pragma once

// Text output: normalized polynomials, tables in plain/csv/json/markdown, and
// JSON records for single Betti values and CE blocks.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "betti_table.hpp"
#include "ce.hpp"
#include "core.hpp"
#include "engine.hpp"

namespace confbetti {

enum class OutputFormat { Plain, Csv, Json, Markdown };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "plain") return OutputFormat::Plain;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  if (s == "markdown") return OutputFormat::Markdown;
  throw std::invalid_argument("unknown format '" + s + "'");
}

/// Polynomial as one fraction over the lcm of its denominators, highest
/// power first: "(2i^3+3i^2+10i+9)/8", "2i-1", "0".
inline std::string render_polynomial(const std::vector<Rational>& coeffs, const std::string& var = "i") {
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::string body;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    const Rational scaled = coeffs[d] * Rational(den);
    if (scaled == 0) continue;
    const Integer num = scaled.get_num();
    const Integer mag = abs(num);
    if (sgn(num) < 0) body += "-";
    else if (!body.empty()) body += "+";
    if (d == 0 || mag != 1) body += mag.get_str();
    if (d >= 1) body += var;
    if (d >= 2) body += "^" + std::to_string(d);
  }
  if (body.empty()) return "0";
  if (den == 1) return body;
  return "(" + body + ")/" + den.get_str();
}

inline std::string render_polynomial(const FittedPolynomial& p, const std::string& var = "i") {
  return render_polynomial(p.coefficients, var);
}

/// Rectangular table of strings with a header row.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string render_table(const TextTable& t, OutputFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::Csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << detail::csv_field(cells[c]);
        out << '\n';
      };
      line(t.header);
      for (const auto& r : t.rows) line(r);
      break;
    }
    case OutputFormat::Plain: {
      std::vector<std::size_t> width(t.header.size(), 0);
      auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) width[c] = std::max(width[c], cells[c].size());
      };
      widen(t.header);
      for (const auto& r : t.rows) widen(r);
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c) out << "  ";
          out << std::string(width[c] - cells[c].size(), ' ') << cells[c];
        }
        out << '\n';
      };
      line(t.header);
      for (const auto& r : t.rows) line(r);
      break;
    }
    case OutputFormat::Markdown: {
      auto line = [&](const std::vector<std::string>& cells) {
        out << '|';
        for (const auto& c : cells) out << ' ' << c << " |";
        out << '\n';
      };
      line(t.header);
      out << '|';
      for (std::size_t c = 0; c < t.header.size(); ++c) out << " --- |";
      out << '\n';
      for (const auto& r : t.rows) line(r);
      break;
    }
    case OutputFormat::Json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& r : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < r.size(); ++c) obj[t.header[c]] = r[c];
        rows.push_back(std::move(obj));
      }
      out << rows.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

enum class StablePath { Formula, Series };

/// Stable Betti numbers beta_i^st(Sigma_g), one row per i, one column per g.
inline TextTable stable_table(int max_g, int max_i, StablePath path = StablePath::Series) {
  if (max_g < 0 || max_i < 0) throw std::invalid_argument("bounds must be nonnegative");
  TextTable t;
  t.header.push_back("i");
  for (int g = 0; g <= max_g; ++g) t.header.push_back(std::to_string(g));
  std::vector<TruncatedSeries> series;
  if (path == StablePath::Series) {
    for (int g = 0; g <= max_g; ++g) series.push_back(master_series(g, MasterSeries::Stable, max_i));
  }
  for (int i = 0; i <= max_i; ++i) {
    std::vector<std::string> row{std::to_string(i)};
    for (int g = 0; g <= max_g; ++g) {
      row.push_back(path == StablePath::Series ? series[g].integer_coefficient(i).get_str()
                                               : betti_closed_stable(g, i).str());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// The six fixed-genus polynomials for one genus, in the order
/// p^st, q^st, p^0, q^0, p^1, q^1.
inline std::vector<FittedPolynomial> genus_polynomials(int g) {
  std::vector<FittedPolynomial> out;
  for (auto f : {PolynomialFamily::Stable, PolynomialFamily::Diagonal, PolynomialFamily::Top}) {
    for (auto p : {Parity::Odd, Parity::Even}) out.push_back(polynomial_fit(g, f, p));
  }
  return out;
}

inline const char* polynomial_symbol(PolynomialFamily f, Parity p) {
  static const char* names[3][2] = {{"p^st", "q^st"}, {"p^0", "q^0"}, {"p^1", "q^1"}};
  return names[static_cast<int>(f)][static_cast<int>(p)];
}

/// Rows "g,family,parity,polynomial" for every genus up to max_g.
inline TextTable polynomial_table(int max_g) {
  TextTable t{{"g", "family", "parity", "polynomial"}, {}};
  for (int g = 0; g <= max_g; ++g) {
    for (const auto& fit : genus_polynomials(g)) {
      t.rows.push_back({std::to_string(g), to_string(fit.family), to_string(fit.parity), render_polynomial(fit)});
    }
  }
  return t;
}

/// Coefficients as a JSON array of exact rational strings, t^0 first.
inline nlohmann::ordered_json series_json(const TruncatedSeries& s) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& c : s.coeffs()) j.push_back(to_string(c));
  return j;
}

inline nlohmann::ordered_json surface_json(const Surface& s) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(s.kind());
  j["name"] = s.name();
  if (s.orientable()) j["genus"] = s.genus();
  else j["crosscaps"] = s.crosscaps();
  j["punctures"] = s.punctures();
  return j;
}

inline nlohmann::ordered_json betti_json(const Surface& s, int i, int k, const BettiValue& v, Provenance p) {
  nlohmann::ordered_json j;
  j["surface"] = surface_json(s);
  j["i"] = i;
  j["k"] = k;
  j["betti"] = v.str();
  j["provenance"] = to_string(p);
  return j;
}

inline std::string render_monomial(const std::vector<GeneratorSpec>& gens, const Monomial& m) {
  std::string out;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (m[x] == 0) continue;
    if (!out.empty()) out += '*';
    out += gens[x].name;
    if (m[x] > 1) out += "^" + std::to_string(m[x]);
  }
  return out.empty() ? "1" : out;
}

/// Basis of block (i, k) and the differential into (i-1, k) as JSON.
inline nlohmann::ordered_json ce_block_json(const Surface& s, int i, int k, const OracleLimits& limits = {}) {
  const CESpec spec = surface_ce_spec(s);
  const BasisBlock source = enumerate_block(spec.generators(), i, k, limits.max_block_dim);
  nlohmann::ordered_json j;
  j["surface"] = surface_json(s);
  j["i"] = i;
  j["k"] = k;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : spec.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}, {"weight", g.weight}});
  j["generators"] = gens;
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const auto& m : source.monomials) basis.push_back(render_monomial(spec.generators(), m));
  j["basis"] = basis;
  nlohmann::ordered_json target_basis = nlohmann::ordered_json::array();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  if (i >= 1) {
    const BasisBlock target = enumerate_block(spec.generators(), i - 1, k, limits.max_block_dim);
    for (const auto& m : target.monomials) target_basis.push_back(render_monomial(spec.generators(), m));
    const SparseRationalMatrix d = build_differential(spec, source, target);
    for (const auto& [pos, v] : d.entries()) entries.push_back({pos.first, pos.second, to_string(v)});
  }
  j["target_basis"] = target_basis;
  j["differential"] = entries;
  return j;
}

}  // namespace confbetti
