#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "confbetti/engine.hpp"
#include "confbetti/render.hpp"
#include "confbetti/verify.hpp"

#ifndef CONFBETTI_DATA_DIR
#define CONFBETTI_DATA_DIR "data"
#endif

namespace confbetti::cli {
namespace {

constexpr int kOracleMaxGenus = 3;
constexpr int kOracleMaxWeight = 10;
constexpr int kSeriesMaxGenus = 40;
constexpr int kSeriesMaxTrunc = 200;
constexpr int kOperatorDegree = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SurfaceFlags {
  std::optional<int> closed_orientable;
  std::vector<int> open_orientable;
  std::optional<int> closed_nonorientable;
  std::vector<int> open_nonorientable;

  void attach(CLI::App& app) {
    app.add_option("--closed-orientable", closed_orientable, "closed orientable surface of genus g")->type_name("g");
    app.add_option("--open-orientable", open_orientable, "genus g surface with n punctures")
        ->expected(2)
        ->type_name("g n");
    app.add_option("--closed-nonorientable", closed_nonorientable, "connected sum of h projective planes")
        ->type_name("h");
    app.add_option("--open-nonorientable", open_nonorientable, "N_h with n punctures")->expected(2)->type_name("h n");
  }

  Surface surface() const {
    const int given = closed_orientable.has_value() + !open_orientable.empty() + closed_nonorientable.has_value() +
                      !open_nonorientable.empty();
    if (given != 1) throw UsageError("give exactly one surface flag");
    if (closed_orientable) return Surface::closed_orientable(*closed_orientable);
    if (!open_orientable.empty()) return Surface::open_orientable(open_orientable[0], open_orientable[1]);
    if (closed_nonorientable) return Surface::closed_nonorientable(*closed_nonorientable);
    return Surface::open_nonorientable(open_nonorientable[0], open_nonorientable[1]);
  }
};

void check_range(const char* what, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw UsageError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

int print_report(const CheckReport& report, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& r : report.results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) {
      ++failed;
      if (!r.detail.empty()) out << ": " << r.detail;
    }
    out << '\n';
  }
  out << report.results.size() - failed << "/" << report.results.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

TextTable series_table(const TruncatedSeries& s) {
  TextTable t{{"power", "coefficient"}, {}};
  for (int j = 0; j <= s.trunc(); ++j) t.rows.push_back({std::to_string(j), to_string(s.coefficient(j))});
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational Betti numbers of unordered configuration spaces of surfaces"};
  app.name("confbetti");
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t max_block_dim = OracleLimits::from_environment().max_block_dim;
  std::string data_dir = CONFBETTI_DATA_DIR;
  std::string format_name = "plain";
  app.add_option("--max-block-dim", max_block_dim, "largest CE/X block the oracle may build")
      ->envname("CONFBETTI_MAX_BLOCK_DIM")
      ->check(CLI::PositiveNumber);
  app.add_option("--data-dir", data_dir, "directory holding the table fixtures");
  app.add_option("--format", format_name, "plain, csv, json or markdown")
      ->check(CLI::IsMember({"plain", "csv", "json", "markdown"}));

  // betti
  auto* betti_cmd = app.add_subcommand("betti", "beta_i(B_k(surface))");
  SurfaceFlags betti_surface;
  betti_surface.attach(*betti_cmd);
  int betti_i = 0, betti_k = 0;
  bool betti_oracle_flag = false;
  betti_cmd->add_option("-i", betti_i, "homological degree")->required()->check(CLI::NonNegativeNumber);
  betti_cmd->add_option("-k", betti_k, "number of points")->required()->check(CLI::NonNegativeNumber);
  betti_cmd->add_flag("--oracle", betti_oracle_flag, "compute by the Chevalley-Eilenberg complex instead");

  // stable-table
  auto* table_cmd = app.add_subcommand("stable-table", "stable Betti numbers of closed orientable surfaces");
  int table_g = 6, table_i = 43;
  std::string table_path = "series";
  table_cmd->add_option("--max-g", table_g, "largest genus")->check(CLI::Range(0, kSeriesMaxGenus));
  table_cmd->add_option("--max-i", table_i, "largest degree")->check(CLI::Range(0, kSeriesMaxTrunc));
  table_cmd->add_option("--path", table_path, "series or formula")->check(CLI::IsMember({"series", "formula"}));

  // polys
  auto* polys_cmd = app.add_subcommand("polys", "fixed-genus polynomials in i");
  int polys_g = 1;
  std::string polys_family = "all";
  polys_cmd->add_option("-g,--genus", polys_g, "genus")->required()->check(CLI::Range(0, kSeriesMaxGenus));
  polys_cmd->add_option("--family", polys_family, "stable, diag, top or all")
      ->check(CLI::IsMember({"stable", "diag", "top", "all"}));

  // series
  auto* series_cmd = app.add_subcommand("series", "truncated Poincare series");
  std::string series_which = "P_st";
  int series_g = 1, series_n = 1, series_trunc = 12;
  series_cmd->add_option("which", series_which, "K, X, S, V, kerdD, P_st, P_0 or P_1")
      ->required()
      ->check(CLI::IsMember({"K", "X", "S", "V", "kerdD", "P_st", "P_0", "P_1"}));
  series_cmd->add_option("-g,--genus", series_g, "genus")->check(CLI::Range(0, kSeriesMaxGenus));
  series_cmd->add_option("-n", series_n, "second index of V")->check(CLI::Range(0, kSeriesMaxGenus));
  series_cmd->add_option("--trunc", series_trunc, "truncation order")->check(CLI::Range(0, kSeriesMaxTrunc));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  int verify_g = -1, verify_k = -1, verify_trunc = -1;
  verify_cmd->add_option("suite", suite, "figures, oracle, recurrences or all")
      ->check(CLI::IsMember({"figures", "oracle", "recurrences", "all"}));
  verify_cmd->add_option("--max-g", verify_g, "largest genus");
  verify_cmd->add_option("--max-k", verify_k, "largest weight for closed orientable surfaces");
  verify_cmd->add_option("--trunc", verify_trunc, "series truncation order");

  // ce-dump
  auto* dump_cmd = app.add_subcommand("ce-dump", "basis and differential of one CE block as JSON");
  SurfaceFlags dump_surface;
  dump_surface.attach(*dump_cmd);
  int dump_i = 0, dump_k = 0;
  dump_cmd->add_option("-i", dump_i, "homological degree")->required()->check(CLI::NonNegativeNumber);
  dump_cmd->add_option("-k", dump_k, "weight")->required()->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  OracleLimits limits;
  limits.max_block_dim = max_block_dim;
  const OutputFormat format = parse_format(format_name);

  try {
    if (*betti_cmd) {
      const Surface s = betti_surface.surface();
      BettiValue value(0L);
      Provenance prov = Provenance::Oracle;
      if (betti_oracle_flag) {
        value = betti_oracle(s, betti_i, betti_k, limits).at(GradedIndex(betti_i, betti_k));
      } else {
        const auto r = betti(s, betti_i, betti_k);
        value = r.value;
        prov = r.provenance;
      }
      if (format == OutputFormat::Json) {
        out << betti_json(s, betti_i, betti_k, value, prov).dump() << '\n';
      } else if (format == OutputFormat::Plain) {
        out << value.str() << " (" << to_string(prov) << ")\n";
      } else {
        TextTable t{{"surface", "i", "k", "betti", "provenance"},
                    {{s.name(), std::to_string(betti_i), std::to_string(betti_k), value.str(), to_string(prov)}}};
        out << render_table(t, format);
      }
      return 0;
    }

    if (*table_cmd) {
      out << render_table(stable_table(table_g, table_i, table_path == "formula" ? StablePath::Formula : StablePath::Series),
                          format);
      return 0;
    }

    if (*polys_cmd) {
      TextTable t{{"symbol", "family", "parity", "polynomial"}, {}};
      for (const auto& fit : genus_polynomials(polys_g)) {
        if (polys_family != "all" && polys_family != to_string(fit.family)) continue;
        t.rows.push_back({std::string(polynomial_symbol(fit.family, fit.parity)) + "_" + std::to_string(polys_g),
                          to_string(fit.family), to_string(fit.parity), render_polynomial(fit)});
      }
      out << render_table(t, format);
      return 0;
    }

    if (*series_cmd) {
      TruncatedSeries s(series_trunc);
      if (series_which == "K") s = K_series(series_g, series_trunc);
      else if (series_which == "X") s = X_series(series_g, series_trunc);
      else if (series_which == "S") s = S_series(series_trunc);
      else if (series_which == "V") s = V_series(series_g, series_n, series_trunc);
      else if (series_which == "kerdD") s = ker_deltaDelta_series(series_g, series_trunc);
      else if (series_which == "P_st") s = master_series(series_g, MasterSeries::Stable, series_trunc);
      else if (series_which == "P_0") s = master_series(series_g, MasterSeries::Diagonal, series_trunc);
      else s = master_series(series_g, MasterSeries::Top, series_trunc);
      if (format == OutputFormat::Plain) out << render(s) << '\n';
      else if (format == OutputFormat::Json) out << series_json(s).dump() << '\n';
      else out << render_table(series_table(s), format);
      return 0;
    }

    if (*verify_cmd) {
      const bool all = suite == "all";
      CheckReport report;
      if (all || suite == "figures") report.append(verify_figures(data_dir));
      if (all || suite == "oracle") {
        const int g = verify_g < 0 ? 2 : verify_g;
        const int k = verify_k < 0 ? 6 : verify_k;
        check_range("--max-g", g, 0, kOracleMaxGenus);
        check_range("--max-k", k, 0, kOracleMaxWeight);
        report.append(verify_oracle(g, k, limits));
      }
      if (all || suite == "recurrences") {
        const int g = verify_g < 0 ? 8 : verify_g;
        const int t = verify_trunc < 0 ? 40 : verify_trunc;
        check_range("--max-g", g, 0, kSeriesMaxGenus);
        check_range("--trunc", t, 0, kSeriesMaxTrunc);
        report.append(verify_recurrences(g, t, kOperatorDegree, limits));
      }
      return print_report(report, out);
    }

    if (*dump_cmd) {
      out << ce_block_json(dump_surface.surface(), dump_i, dump_k, limits).dump(2) << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "mismatch: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace confbetti::cli
