#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "primetab/series.hpp"

namespace primetab {

enum class CheckStatus { pass, fail, reported_finding };

const char* to_string(CheckStatus status) noexcept;

using CheckValue = std::variant<std::monostate, double, std::complex<double>>;

/// One verification result. Rendered as
///   CHECK <name> <status> computed=<v> ref=<v> residual=<r> tol=<t>
struct CheckRecord {
  std::string name;
  CheckValue computed;
  CheckValue reference;
  double residual;
  double tolerance;
  CheckStatus status;
};

/// status = pass iff residual <= tolerance.
CheckRecord make_check(std::string name, CheckValue computed, CheckValue reference, double residual,
                       double tolerance);

/// Audit of a claim whose nonzero residual is the expected outcome; never fails a run.
CheckRecord make_finding(std::string name, CheckValue computed, CheckValue reference,
                         double residual, double tolerance);

std::string render(const CheckRecord& record);

enum class Suite { tables, identities, corollaries, zeros, all };

Suite parse_suite(std::string_view name);

struct RunConfig {
  std::uint64_t sieve_limit = 1'000'000;
  TruncationSpec truncation{};
  double table_tolerance = 5e-10;
  std::filesystem::path golden_dir;
  std::filesystem::path out;  // empty: standard output
  std::string format = "tsv";
  double zero_t_max = 30.0;
  double zero_scan_step = 0.1;
  double zero_tol = 1e-12;

  /// Throws ConfigError.
  void validate() const;
};

/// Reads key=value lines ('#' comments) into `config`. Keys are the long CLI
/// flag names: limit, tol, golden, out, format, t-max, scan-step, zero-tol,
/// term-limit, mu-max, mercator-order. Unknown keys are a ConfigError.
void apply_config_file(const std::filesystem::path& path, RunConfig& config);

struct VerifyReport {
  std::vector<CheckRecord> records;

  /// 0 when no record failed, 1 otherwise (an empty report also fails).
  int exit_status() const;
  std::string text() const;
};

VerifyReport run_verify(const RunConfig& config, Suite suite);

}  // namespace primetab
