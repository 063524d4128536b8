#pragma once

// Table generation, emission in exchange formats, and regression against the
// digitized printed tables with an erratum ledger.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primetab/primes.hpp"

namespace primetab {

struct NaturalRow {
  std::uint64_t n;
  NumberKind kind;
  std::uint64_t ordinal;
  double t;  // +inf for n = 1

  friend bool operator==(const NaturalRow&, const NaturalRow&) = default;
};

enum class TableFormat { tsv, csv, markdown };
enum class TableLayout { mixed, primes_only, band };

TableFormat parse_format(std::string_view name);
TableLayout parse_layout(std::string_view name);

/// Fixed 10 decimals; "inf" for the sentinel.
std::string format_t(double t);

/// One row per N in [n_from, n_to].
std::vector<NaturalRow> generate_rows(const Sieve& sieve, std::uint64_t n_from, std::uint64_t n_to);

/// Prime rows for ordinals m_from..m_to.
std::vector<NaturalRow> generate_prime_rows(const Sieve& sieve, std::uint64_t m_from,
                                            std::uint64_t m_to);

/// Header line plus one line per row. primes_only and band keep only prime rows.
/// Throws std::invalid_argument when nothing remains to emit.
std::string emit_table(const std::vector<NaturalRow>& rows, TableFormat format, TableLayout layout);

/// Inverse of emit_table. t is restored from its printed text.
std::vector<NaturalRow> parse_table(std::string_view text, TableFormat format, TableLayout layout);

// ---------------------------------------------------------------------------
// Golden corpus

/// One printed cell as digitized. kind is prime | nonprime | both | none and
/// ordinal is the printed label text ("17", "37/124", "-").
struct GoldenRow {
  std::string table_id;  // mixed | primes | band_t | band_t0
  std::uint64_t n;
  std::string kind;
  std::string ordinal;
  std::string t_printed;
  std::size_t line;
};

enum class ErratumClass { label, next_prime, ordinal_shift, duplicate, digit, misprint };

struct ErratumEntry {
  std::string table_id;
  std::uint64_t from;
  std::uint64_t to;
  ErratumClass cls;
  std::optional<std::uint64_t> ref;  // duplicate: locator whose recomputed value was printed
  std::string note;
  std::size_t line;
};

enum class DiffStatus { match, erratum, unresolved };

const char* to_string(DiffStatus status) noexcept;
const char* to_string(ErratumClass cls) noexcept;

struct GoldenDiff {
  std::string table_id;
  std::uint64_t locator;  // N for the mixed table, m otherwise
  std::string printed;
  double recomputed;
  double abs_delta;
  DiffStatus status;
  std::string note;
};

struct GoldenSummary {
  std::size_t rows = 0;
  std::size_t matched = 0;
  std::size_t errata = 0;
  std::size_t unresolved = 0;
  double max_matched_delta = 0.0;
  std::vector<std::size_t> stale_entries;  // ledger lines that explain nothing
};

struct GoldenReport {
  std::vector<GoldenDiff> diffs;
  GoldenSummary summary;
};

inline constexpr double kTableTolerance = 5e-10;

/// Header: table_id n kind ordinal t_printed (tab separated).
std::vector<GoldenRow> parse_golden(std::istream& in, const std::string& source);
std::vector<GoldenRow> load_golden(const std::filesystem::path& path);

/// Header: table_id from to class ref note. Lines starting with '#' are comments.
std::vector<ErratumEntry> parse_ledger(std::istream& in, const std::string& source);
std::vector<ErratumEntry> load_ledger(const std::filesystem::path& path);

/// Recomputes every golden row. A mismatch becomes an erratum only when a ledger
/// entry covers the row and its class is confirmed by recomputation; every
/// other mismatch is unresolved.
GoldenReport compare_golden(const Sieve& sieve, const std::vector<GoldenRow>& rows,
                            const std::vector<ErratumEntry>& ledger,
                            double tolerance = kTableTolerance);

}  // namespace primetab
