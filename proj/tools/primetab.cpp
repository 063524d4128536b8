// primetab command line front end.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "primetab/error.hpp"
#include "primetab/primes.hpp"
#include "primetab/report.hpp"
#include "primetab/series.hpp"
#include "primetab/tables.hpp"
#include "primetab/tvalue.hpp"
#include "primetab/zeta.hpp"

#ifndef PRIMETAB_DATA_DIR
#define PRIMETAB_DATA_DIR "data/golden"
#endif

namespace {

using namespace primetab;

// Writes to --out when given, standard output otherwise.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + cfg.out.string());
  f << text;
}

std::string tvalue_text(const TValue& v) {
  return fmt::format("n={} kind={} ordinal={} t={}\n", v.subject, to_string(v.kind), v.ordinal,
                     format_t(v.t));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"primetab: t-value tables, series identities and zeta zeros"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.golden_dir = PRIMETAB_DATA_DIR;
  std::string config_file;
  std::string golden_dir;
  std::string out_path;
  std::optional<std::uint64_t> limit;
  std::optional<std::string> format;
  std::optional<double> tol;

  app.add_option("--config", config_file, "key=value configuration file");
  app.add_option("--limit", limit, "sieve limit");
  app.add_option("--format", format, "tsv, csv or markdown");
  app.add_option("--out", out_path, "write output to FILE");
  app.add_option("--tol", tol, "table tolerance");
  app.add_option("--golden", golden_dir, "golden table directory");

  auto* table = app.add_subcommand("table", "mixed table of naturals");
  std::uint64_t n_from = 1;
  std::uint64_t n_to = 100;
  table->add_option("--from", n_from, "first N");
  table->add_option("--to", n_to, "last N");

  auto* primes = app.add_subcommand("primes", "primes-only table");
  std::uint64_t m_from = 1;
  std::uint64_t m_to = 1000;
  std::string layout = "primes_only";
  primes->add_option("--from", m_from, "first m");
  primes->add_option("--to", m_to, "last m");
  primes->add_option("--layout", layout, "primes_only or band");

  auto* tvalue = app.add_subcommand("tvalue", "t for one natural or one prime ordinal");
  std::optional<std::uint64_t> tv_n;
  std::optional<std::uint64_t> tv_m;
  auto* opt_n = tvalue->add_option("--n", tv_n, "natural number");
  auto* opt_m = tvalue->add_option("--m", tv_m, "prime ordinal");
  opt_n->excludes(opt_m);

  auto* band = app.add_subcommand("band", "t0 band for the m-th prime");
  std::uint64_t band_m = 1;
  band->add_option("--m", band_m, "prime ordinal")->required();

  auto* recurrence = app.add_subcommand("recurrence", "shift F = -m(m+1) by k");
  std::int64_t rec_m = 1;
  std::int64_t rec_k = 1;
  recurrence->add_option("--m", rec_m, "start ordinal")->required();
  recurrence->add_option("--k", rec_k, "shift")->required();

  auto* zeros = app.add_subcommand("zeros", "zeros on the critical line");
  std::optional<double> t_max;
  std::optional<double> scan_step;
  zeros->add_option("--t-max", t_max, "upper end of the scan");
  zeros->add_option("--scan-step", scan_step, "grid step");

  auto* basel = app.add_subcommand("basel", "Basel sum and sine-product coefficient");
  std::uint64_t basel_terms = 1000;
  basel->add_option("--terms", basel_terms, "number of terms");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_name = "all";
  verify->add_option("suite", suite_name, "tables, identities, corollaries, zeros or all");

  auto* golden = app.add_subcommand("golden", "row-by-row diff of the golden tables");
  bool only_mismatch = false;
  golden->add_flag("--mismatches", only_mismatch, "omit matching rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!config_file.empty()) apply_config_file(config_file, cfg);
    if (limit) cfg.sieve_limit = *limit;
    if (format) cfg.format = *format;
    if (tol) cfg.table_tolerance = *tol;
    if (!golden_dir.empty()) cfg.golden_dir = golden_dir;
    if (!out_path.empty()) cfg.out = out_path;
    if (t_max) cfg.zero_t_max = *t_max;
    if (scan_step) cfg.zero_scan_step = *scan_step;
    if (cfg.truncation.term_limit > cfg.sieve_limit) cfg.truncation.term_limit = cfg.sieve_limit;
    cfg.validate();
  } catch (const ConfigError& e) {
    std::cerr << "primetab: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto fmt_kind = parse_format(cfg.format);

    if (*verify) {
      Suite suite;
      try {
        suite = parse_suite(suite_name);
      } catch (const ConfigError& e) {
        std::cerr << "primetab: " << e.what() << "\n";
        return 2;
      }
      const auto report = run_verify(cfg, suite);
      emit(cfg, report.text());
      return report.exit_status();
    }

    const Sieve sieve(cfg.sieve_limit);

    if (*table) {
      emit(cfg, emit_table(generate_rows(sieve, n_from, n_to), fmt_kind, TableLayout::mixed));
    } else if (*primes) {
      emit(cfg, emit_table(generate_prime_rows(sieve, m_from, m_to), fmt_kind, parse_layout(layout)));
    } else if (*tvalue) {
      if (tv_n) {
        emit(cfg, tvalue_text(t_for(sieve, *tv_n)));
      } else if (tv_m) {
        emit(cfg, tvalue_text(t_prime(*tv_m, sieve.nth_prime(*tv_m))));
      } else {
        std::cerr << "primetab: tvalue needs --n or --m\n";
        return 2;
      }
    } else if (*band) {
      const auto p = sieve.nth_prime(band_m);
      const auto tv = t_prime(band_m, p);
      const auto b = t_band(p);
      emit(cfg, fmt::format("m={} p={} t={} t0={} arrest={} inside={}\n", band_m, p,
                            format_t(tv.t), format_t(b.t0), format_t(b.arrest),
                            band_membership(tv) ? "yes" : "no"));
    } else if (*recurrence) {
      if (rec_m < 1) throw std::invalid_argument("--m must be at least 1");
      const double f = -static_cast<double>(rec_m) * static_cast<double>(rec_m + 1);
      const double fwd = recurrence_shift({f, rec_k}, Direction::forward);
      std::string text = fmt::format("F_start={:.12g}\nforward={:.12g} m={:.12g}\n", f, fwd, m_from_f(fwd));
      if (rec_k < rec_m) {
        const double back = recurrence_shift({f, rec_k}, Direction::backward);
        text += fmt::format("backward={:.12g} m={:.12g}\n", back, m_from_f(back));
      }
      emit(cfg, text);
    } else if (*zeros) {
      const auto scan = locate_zeros(cfg.zero_t_max, cfg.zero_scan_step, cfg.zero_tol);
      std::string text;
      for (const auto& z : scan.zeros) {
        text += fmt::format("{:.12f}\t{:.3e}\n", z.refined_t, z.residual);
      }
      text += fmt::format("# found={} expected~{:.2f}\n", scan.zeros.size(), scan.expected_count);
      if (!scan.warning.empty()) text += "# warning: " + scan.warning + "\n";
      emit(cfg, text);
    } else if (*basel) {
      const auto b = basel_partial(basel_terms);
      const double pi = 3.14159265358979323846;
      emit(cfg, fmt::format("terms={}\npartial={:.15g}\npi^2/6={:.15g}\ncoeff_sum={:.15g}\n1/3!={:.15g}\n",
                            b.n_terms, b.partial, pi * pi / 6.0, b.coeff_rhs_partial, b.coeff_lhs));
    } else if (*golden) {
      const auto ledger = load_ledger(cfg.golden_dir / "errata.tsv");
      std::string text = "table_id\tlocator\tprinted\trecomputed\tabs_delta\tstatus\tnote\n";
      std::size_t unresolved = 0;
      for (const char* file : {"primes.tsv", "mixed.tsv", "band.tsv"}) {
        const auto rep = compare_golden(sieve, load_golden(cfg.golden_dir / file), ledger,
                                        cfg.table_tolerance);
        unresolved += rep.summary.unresolved;
        for (const auto& d : rep.diffs) {
          if (only_mismatch && d.status == DiffStatus::match) continue;
          text += fmt::format("{}\t{}\t{}\t{}\t{:.3e}\t{}\t{}\n", d.table_id, d.locator, d.printed,
                              format_t(d.recomputed), d.abs_delta, to_string(d.status), d.note);
        }
      }
      emit(cfg, text);
      return unresolved == 0 ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "primetab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "primetab: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
