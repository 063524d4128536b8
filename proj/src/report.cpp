#include "primetab/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "primetab/error.hpp"
#include "primetab/primes.hpp"
#include "primetab/tables.hpp"
#include "primetab/tvalue.hpp"
#include "primetab/zeta.hpp"

namespace primetab {

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::reported_finding:
      return "reported-finding";
  }
  return "?";
}

CheckRecord make_check(std::string name, CheckValue computed, CheckValue reference, double residual,
                       double tolerance) {
  const auto status = residual <= tolerance ? CheckStatus::pass : CheckStatus::fail;
  return {std::move(name), computed, reference, residual, tolerance, status};
}

CheckRecord make_finding(std::string name, CheckValue computed, CheckValue reference,
                         double residual, double tolerance) {
  return {std::move(name), computed, reference, residual, tolerance, CheckStatus::reported_finding};
}

namespace {

std::string render_value(const CheckValue& v) {
  if (std::holds_alternative<double>(v)) return fmt::format("{:.12g}", std::get<double>(v));
  if (std::holds_alternative<std::complex<double>>(v)) {
    const auto c = std::get<std::complex<double>>(v);
    return fmt::format("{:.12g}{:+.12g}i", c.real(), c.imag());
  }
  return "none";
}

}  // namespace

std::string render(const CheckRecord& r) {
  return fmt::format("CHECK {} {} computed={} ref={} residual={:.6g} tol={:.6g}", r.name,
                     to_string(r.status), render_value(r.computed), render_value(r.reference),
                     r.residual, r.tolerance);
}

Suite parse_suite(std::string_view name) {
  if (name == "tables") return Suite::tables;
  if (name == "identities") return Suite::identities;
  if (name == "corollaries") return Suite::corollaries;
  if (name == "zeros") return Suite::zeros;
  if (name == "all") return Suite::all;
  throw ConfigError("unknown suite '" + std::string(name) + "'");
}

void RunConfig::validate() const {
  truncation.validate();
  if (sieve_limit < 7919) throw ConfigError("limit must be at least 7919 (the 1000th prime)");
  if (sieve_limit > kMaxSieveLimit) throw ConfigError("limit exceeds the sieve maximum");
  if (truncation.term_limit > sieve_limit) throw ConfigError("term-limit exceeds limit");
  if (!(table_tolerance > 0.0)) throw ConfigError("tol must be positive");
  if (!(zero_t_max > 0.0)) throw ConfigError("t-max must be positive");
  if (!(zero_scan_step > 0.0 && zero_scan_step <= 0.5)) throw ConfigError("scan-step must lie in (0, 0.5]");
  if (!(zero_tol >= 1e-12)) throw ConfigError("zero-tol must be >= 1e-12");
  if (format != "tsv" && format != "csv" && format != "markdown" && format != "md") {
    throw ConfigError("unknown format '" + format + "'");
  }
}

void apply_config_file(const std::filesystem::path& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(fmt::format("{}:{}: expected key=value", path.string(), line_no));
    }
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const auto key = strip(line.substr(0, eq));
    const auto value = strip(line.substr(eq + 1));
    try {
      if (key == "limit") {
        config.sieve_limit = std::stoull(value);
      } else if (key == "tol") {
        config.table_tolerance = std::stod(value);
      } else if (key == "golden") {
        config.golden_dir = value;
      } else if (key == "out") {
        config.out = value;
      } else if (key == "format") {
        config.format = value;
      } else if (key == "t-max") {
        config.zero_t_max = std::stod(value);
      } else if (key == "scan-step") {
        config.zero_scan_step = std::stod(value);
      } else if (key == "zero-tol") {
        config.zero_tol = std::stod(value);
      } else if (key == "term-limit") {
        config.truncation.term_limit = std::stoull(value);
      } else if (key == "mu-max") {
        config.truncation.mu_max = static_cast<std::uint32_t>(std::stoul(value));
      } else if (key == "mercator-order") {
        config.truncation.mercator_order = static_cast<std::uint32_t>(std::stoul(value));
      } else {
        throw ConfigError(fmt::format("{}:{}: unknown key '{}'", path.string(), line_no, key));
      }
    } catch (const std::logic_error&) {
      throw ConfigError(fmt::format("{}:{}: bad value for '{}'", path.string(), line_no, key));
    }
  }
}

int VerifyReport::exit_status() const {
  if (records.empty()) return 1;
  const bool failed = std::any_of(records.begin(), records.end(), [](const CheckRecord& r) {
    return r.status == CheckStatus::fail;
  });
  return failed ? 1 : 0;
}

std::string VerifyReport::text() const {
  std::string out;
  for (const auto& r : records) out += render(r) + "\n";
  if (records.empty()) out += "CHECK report_nonempty fail computed=0 ref=1 residual=1 tol=0\n";
  return out;
}

namespace {

constexpr double kPi = std::numbers::pi;

using Records = std::vector<CheckRecord>;

double rel_diff(std::complex<double> a, std::complex<double> b, double scale) {
  return std::abs(a - b) / std::max(1.0, scale);
}

void tables_suite(const RunConfig& cfg, const Sieve& sieve, Records& out) {
  const auto ledger = load_ledger(cfg.golden_dir / "errata.tsv");
  std::size_t stale = 0;
  for (const char* file : {"primes.tsv", "mixed.tsv", "band.tsv"}) {
    const auto rows = load_golden(cfg.golden_dir / file);
    const auto report = compare_golden(sieve, rows, ledger, cfg.table_tolerance);
    stale += report.summary.stale_entries.size();

    std::map<std::string, GoldenSummary> per_table;
    GoldenSummary mixed_head;
    for (const auto& d : report.diffs) {
      auto& s = per_table[d.table_id];
      ++s.rows;
      const bool head = d.table_id == "mixed" && d.locator <= 300;
      if (head) ++mixed_head.rows;
      switch (d.status) {
        case DiffStatus::match:
          ++s.matched;
          s.max_matched_delta = std::max(s.max_matched_delta, d.abs_delta);
          break;
        case DiffStatus::erratum:
          ++s.errata;
          if (head) ++mixed_head.errata;
          break;
        case DiffStatus::unresolved:
          ++s.unresolved;
          if (head) ++mixed_head.unresolved;
          break;
      }
    }
    for (const auto& [id, s] : per_table) {
      const auto unresolved = static_cast<double>(s.unresolved);
      out.push_back(make_check("golden_" + id + "_unresolved", unresolved, 0.0, unresolved, 0.0));
      out.push_back(make_check("golden_" + id + "_max_match_delta", s.max_matched_delta, 0.0,
                               s.max_matched_delta, cfg.table_tolerance));
      out.push_back(make_finding("golden_" + id + "_errata", static_cast<double>(s.errata),
                                 std::monostate{}, static_cast<double>(s.errata), 0.0));
    }
    if (mixed_head.rows > 0) {
      const auto u = static_cast<double>(mixed_head.unresolved);
      out.push_back(make_check("golden_mixed_n300_unresolved", u, 0.0, u, 0.0));
    }
  }
  out.push_back(make_check("golden_ledger_stale_entries", static_cast<double>(stale), 0.0,
                           static_cast<double>(stale), 0.0));

  // Non-prime denominator: ln c reproduces the printed values, ln eta does not.
  const double t4 = t_nonprime(2, 4).t;
  const double t6 = t_nonprime(3, 6).t;
  out.push_back(make_check("t_eta_ln_c_n4", t4, 0.8879495235, std::abs(t4 - 0.8879495235),
                           cfg.table_tolerance));
  out.push_back(make_check("t_eta_ln_c_n6", t6, 0.7619479172, std::abs(t6 - 0.7619479172),
                           cfg.table_tolerance));
  const double t4_eta = std::acos(2.0 / 6.0) / std::log(2.0);
  out.push_back(make_finding("t_eta_ln_eta_n4", t4_eta, 0.8879495235,
                             std::abs(t4_eta - 0.8879495235), cfg.table_tolerance));

  // Relation round trip, band membership and inversion over the first 1000 primes.
  double worst_star = 0.0;
  double worst_m = 0.0;
  std::size_t outside = 0;
  std::size_t not_decreasing = 0;
  double prev_t = std::numeric_limits<double>::infinity();
  for (std::uint64_t m = 1; m <= 1000; ++m) {
    const auto p = sieve.nth_prime(m);
    const auto tv = t_prime(m, p);
    const double scale = static_cast<double>(m) * static_cast<double>(m + 1);
    worst_star = std::max(worst_star, std::abs(star_residual(m, p, tv.t)) / scale);
    worst_m = std::max(worst_m, std::abs(m_from_pt(p, tv.t) - static_cast<double>(m)));
    if (!band_membership(tv)) ++outside;
    if (!(tv.t < prev_t)) ++not_decreasing;
    prev_t = tv.t;
  }
  out.push_back(make_check("star_roundtrip_m1_1000", worst_star, 0.0, worst_star, 1e-9));
  out.push_back(make_check("m_from_pt_roundtrip_m1_1000", worst_m, 0.0, worst_m, 1e-3));
  out.push_back(make_check("band_membership_m1_1000", static_cast<double>(outside), 0.0,
                           static_cast<double>(outside), 0.0));
  out.push_back(make_check("t_prime_decreasing_m1_1000", static_cast<double>(not_decreasing), 0.0,
                             static_cast<double>(not_decreasing), 0.0));

  std::size_t nonprime_outside = 0;
  for (std::uint64_t c = 4; c <= 7919; ++c) {
    if (sieve.is_prime(c)) continue;
    const auto tv = t_for(sieve, c);
    if (!(tv.t > 0.0 && tv.t < t_band(c).t0)) ++nonprime_outside;
  }
  out.push_back(make_check("nonprime_below_t0_c7919", static_cast<double>(nonprime_outside), 0.0,
                           static_cast<double>(nonprime_outside), 0.0));

  const auto profile = limit_profile(sieve, 1000);
  out.push_back(make_check("limit_difference_m1000", profile.back().difference, 0.0,
                           profile.back().difference, 1e-4));
  out.push_back(make_finding("limit_ratio_m1000", profile.back().ratio, 1.0,
                             std::abs(profile.back().ratio - 1.0), 1e-4));

  for (const std::uint64_t x : {10, 100, 1000, 7919}) {
    const auto demo = pi_via_star(sieve, x);
    const auto pi = static_cast<double>(sieve.count_primes_below(x));
    out.push_back(make_check(fmt::format("pi_via_star_x{}", x), static_cast<double>(demo.m), pi,
                             std::abs(static_cast<double>(demo.m) - pi), 0.0));
  }
}

void identities_suite(const RunConfig& cfg, const Sieve& sieve, Records& out) {
  const auto& spec = cfg.truncation;
  for (const double sigma : {2.0, 3.0, 4.0}) {
    const double reference = std::log(zeta_real_partial(sigma, spec));
    const double prime_powers = log_zeta_prime_expansion(sieve, sigma, spec);
    const double mercator = log_zeta_mercator(sigma, spec);
    const int s = static_cast<int>(sigma);
    out.push_back(make_check(fmt::format("eq1_log_zeta_sigma{}", s), prime_powers, reference,
                             std::abs(prime_powers - reference), 1e-8));
    out.push_back(make_check(fmt::format("eq2_mercator_sigma{}", s), mercator, reference,
                             std::abs(mercator - reference), 1e-8));
  }
  for (const double sigma : {2.0, 3.0}) {
    const double product = euler_product_partial(sieve, sigma, spec);
    const double sum = zeta_real_partial(sigma, spec);
    out.push_back(make_check(fmt::format("euler_product_sigma{}", static_cast<int>(sigma)), product,
                             sum, std::abs(product - sum), 1e-6));
  }

  const ComplexPoint points[] = {{2.0, 0.0}, {3.0, 1.0}, {0.5, 14.134725}};
  const char* point_names[] = {"s2", "s3p1i", "s05p14i"};
  for (std::size_t i = 0; i < 3; ++i) {
    for (const std::uint64_t cutoff : {10, 1000, 7919}) {
      const auto trip = corollary2_triplet(sieve, points[i], cutoff);
      const double residual = rel_diff(trip.omega + trip.lambda, trip.zeta,
                                       std::abs(trip.omega) + std::abs(trip.lambda));
      out.push_back(make_check(fmt::format("partition_{}_x{}", point_names[i], cutoff),
                               trip.omega + trip.lambda, trip.zeta, residual, 1e-12));
    }
  }

  for (const std::uint64_t n : {1000, 1000000}) {
    const auto b = basel_partial(n);
    out.push_back(make_check(fmt::format("basel_n{}", n), b.partial, kPi * kPi / 6.0,
                             std::abs(b.partial - kPi * kPi / 6.0), 1.0 / static_cast<double>(n)));
  }
  const auto coeff = basel_partial(1000);
  out.push_back(make_check("basel_coefficient_n1000", coeff.coeff_rhs_partial, coeff.coeff_lhs,
                           std::abs(coeff.coeff_rhs_partial - coeff.coeff_lhs), 2e-4));

  const double target = 2.0 / kPi;
  const double err_k = std::abs(sin_product_partial(kPi / 2.0, 10000) - target);
  const double err_2k = std::abs(sin_product_partial(kPi / 2.0, 20000) - target);
  out.push_back(make_check("sin_product_half_pi_k10000", sin_product_partial(kPi / 2.0, 10000),
                           target, err_k, 1e-4));
  const double ratio = err_k / err_2k;
  out.push_back(make_check("sin_product_order_ratio", ratio, 2.0, std::abs(ratio - 2.0), 0.2));

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> pick(1, 999);
  double worst_forward = 0.0;
  double worst_inverse = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto m = pick(rng);
    const auto k = std::uniform_int_distribution<std::int64_t>(1, 1000 - m)(rng);
    const double f = -static_cast<double>(m) * static_cast<double>(m + 1);
    const double exact = -static_cast<double>(m + k) * static_cast<double>(m + k + 1);
    const double fwd = recurrence_shift({f, k}, Direction::forward);
    const double back = recurrence_shift({fwd, k}, Direction::backward);
    worst_forward = std::max(worst_forward, std::abs(fwd - exact) / std::abs(exact));
    worst_inverse = std::max(worst_inverse, std::abs(back - f) / std::abs(f));
  }
  out.push_back(make_check("recurrence_forward_200", worst_forward, 0.0, worst_forward, 1e-9));
  out.push_back(make_check("recurrence_inverse_200", worst_inverse, 0.0, worst_inverse, 1e-12));
  const double printed_back = recurrence_backward_plus_k2({-6.0, 1});
  out.push_back(make_finding("recurrence_backward_plus_k2_m1_k1", printed_back, -2.0,
                             std::abs(printed_back + 2.0), 1e-12));
}

void corollaries_suite(const RunConfig& cfg, const Sieve& sieve, Records& out) {
  auto spec = cfg.truncation;
  const double eq4 = eq_group_residual(sieve, 2.0, 1, spec);
  out.push_back(make_finding("eq4_residual_sigma2", eq4, 0.0, std::abs(eq4), 1e-6));
  out.push_back(make_check("eq4_residual_magnitude_sigma2", std::abs(eq4), 0.1927,
                           std::abs(std::abs(eq4) - 0.1927), 1e-4));
  TruncationSpec coarse = spec;
  coarse.term_limit = std::min<std::uint64_t>(100000, spec.term_limit);
  TruncationSpec fine = spec;
  fine.term_limit = std::min<std::uint64_t>(1000000, sieve.limit());
  const double eq4_coarse = eq_group_residual(sieve, 2.0, 1, coarse);
  const double eq4_fine = eq_group_residual(sieve, 2.0, 1, fine);
  out.push_back(make_check("eq4_residual_truncation_stability", eq4_fine, eq4_coarse,
                           std::abs(eq4_fine - eq4_coarse), 1e-5));
  for (const std::uint32_t mu : {2u, 3u}) {
    const double r = eq_group_residual(sieve, 2.0, mu, spec);
    out.push_back(make_finding(fmt::format("eq_group_mu{}_sigma2", mu), r, 0.0, std::abs(r), 1e-6));
  }

  TruncationSpec small = spec;
  small.term_limit = 100;
  const auto control = corollary1_sum(sieve, 0.0, small);
  out.push_back(make_check("corollary1_control_t0_x100", control.value, 5.5365,
                           std::abs(control.value - 5.5365), 1e-3));

  const auto scan = locate_zeros(cfg.zero_t_max, cfg.zero_scan_step, cfg.zero_tol);
  TruncationSpec to_7919 = spec;
  to_7919.term_limit = 7919;
  for (std::size_t i = 0; i < scan.zeros.size(); ++i) {
    const double t = scan.zeros[i].refined_t;
    const auto first = corollary1_sum(sieve, t, to_7919);
    const auto again = corollary1_sum(sieve, t, to_7919);
    bool same = first.value == again.value && first.trace.size() == again.trace.size();
    for (std::size_t j = 0; same && j < first.trace.size(); ++j) {
      same = first.trace[j].cutoff == again.trace[j].cutoff &&
             first.trace[j].partial == again.trace[j].partial;
    }
    out.push_back(make_check(fmt::format("corollary1_trace_deterministic_zero{}", i + 1),
                             same ? 0.0 : 1.0, 0.0, same ? 0.0 : 1.0, 0.0));
    out.push_back(make_finding(fmt::format("corollary1_sum_zero{}_x7919", i + 1), first.value, -1.0,
                               std::abs(first.value + 1.0), 1e-6));

    const auto trip = corollary2_triplet(sieve, {0.5, t}, 7919);
    out.push_back(make_finding(fmt::format("corollary2_omega_zero{}_x7919", i + 1), trip.omega,
                               std::complex<double>(-1.0, 0.0),
                               std::abs(trip.omega + 1.0), 1e-6));
    out.push_back(make_finding(fmt::format("corollary2_zeta_zero{}_x7919", i + 1), trip.zeta,
                               std::complex<double>(0.0, 0.0), std::abs(trip.zeta), 1e-6));
    out.push_back(make_finding(fmt::format("corollary2_lambda_zero{}_x7919", i + 1), trip.lambda,
                               std::complex<double>(1.0, 0.0), std::abs(trip.lambda - 1.0), 1e-6));
  }
  if (scan.zeros.empty()) {
    out.push_back(make_check("corollary1_zeros_available", 0.0, 1.0, 1.0, 0.0));
  }

  std::size_t min_count = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t m = 2; m <= 20; ++m) {
    const auto pronic = m * (m + 1);
    const auto limit = std::min<std::uint64_t>(pronic * pronic, sieve.limit());
    const auto count = admissible_primes(sieve, m, limit).size();
    min_count = std::min(min_count, count);
    out.push_back(make_finding(fmt::format("uniqueness_admissible_primes_m{}", m),
                               static_cast<double>(count), 1.0, static_cast<double>(count) - 1.0,
                               0.0));
  }
  const double shortfall = min_count >= 2 ? 0.0 : 2.0 - static_cast<double>(min_count);
  out.push_back(make_check("uniqueness_min_admissible_m2_20", static_cast<double>(min_count), 2.0,
                           shortfall, 0.0));
}

void zeros_suite(const RunConfig& cfg, Records& out) {
  const auto scan = locate_zeros(cfg.zero_t_max, cfg.zero_scan_step, cfg.zero_tol);
  const double found = static_cast<double>(scan.zeros.size());
  out.push_back(make_check("zeros_count_heuristic", found, scan.expected_count,
                           std::abs(found - scan.expected_count), 1.5));
  for (std::size_t i = 0; i < scan.zeros.size(); ++i) {
    const double t = scan.zeros[i].refined_t;
    const double eta = std::abs(zeta_eta({0.5, t}).value);
    const double em = std::abs(zeta_em({0.5, t}).value);
    out.push_back(make_check(fmt::format("zero{}_residual_eta", i + 1), t, std::monostate{}, eta, 1e-8));
    out.push_back(make_check(fmt::format("zero{}_residual_em", i + 1), t, std::monostate{}, em, 1e-8));
  }

  const auto t30 = locate_zeros(30.0, cfg.zero_scan_step, cfg.zero_tol);
  out.push_back(make_check("zeros_count_t30", static_cast<double>(t30.zeros.size()), 3.0,
                           std::abs(static_cast<double>(t30.zeros.size()) - 3.0), 0.0));
  if (!t30.zeros.empty()) {
    const auto halved = locate_zeros(30.0, cfg.zero_scan_step / 2.0, cfg.zero_tol);
    const double a = t30.zeros.front().refined_t;
    const double b = halved.zeros.empty() ? 0.0 : halved.zeros.front().refined_t;
    out.push_back(make_check("zero1_scan_step_stability", b, a, std::abs(a - b), 1e-5));
  }

  const double z2 = kPi * kPi / 6.0;
  const double z4 = std::pow(kPi, 4) / 90.0;
  for (const auto& [name, sigma, exact] :
       {std::tuple{"zeta2", 2.0, z2}, std::tuple{"zeta4", 4.0, z4}}) {
    const auto eta = zeta_eta({sigma, 0.0}).value.real();
    const auto em = zeta_em({sigma, 0.0}).value.real();
    out.push_back(make_check(fmt::format("{}_eta", name), eta, exact, std::abs(eta - exact), 1e-9));
    out.push_back(make_check(fmt::format("{}_em", name), em, exact, std::abs(em - exact), 1e-9));
  }

  std::mt19937_64 rng(1859);
  std::uniform_real_distribution<double> sig(0.5, 3.0);
  std::uniform_real_distribution<double> tim(-40.0, 40.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ComplexPoint s{sig(rng), tim(rng)};
    const auto a = zeta_eta(s);
    const auto b = zeta_em(s);
    worst = std::max(worst, std::abs(a.value - b.value) / (a.est_error + b.est_error));
  }
  out.push_back(make_check("method_agreement_100_points", worst, 0.0, worst, 1.0));

  const double exact = riemann_siegel_theta(20.0);
  const double asym = riemann_siegel_theta_asymptotic(20.0);
  out.push_back(make_check("theta_asymptotic_t20", asym, exact, std::abs(asym - exact), 1e-5));
}

}  // namespace

VerifyReport run_verify(const RunConfig& config, Suite suite) {
  config.validate();
  VerifyReport report;
  const Sieve sieve(config.sieve_limit);
  const bool all = suite == Suite::all;
  if (all || suite == Suite::tables) tables_suite(config, sieve, report.records);
  if (all || suite == Suite::identities) identities_suite(config, sieve, report.records);
  if (all || suite == Suite::corollaries) corollaries_suite(config, sieve, report.records);
  if (all || suite == Suite::zeros) zeros_suite(config, report.records);
  return report;
}

}  // namespace primetab
