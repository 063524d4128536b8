#include "primetab/tables.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "primetab/error.hpp"
#include "primetab/tvalue.hpp"

namespace primetab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<std::uint64_t> to_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

std::optional<double> to_t(std::string_view s) {
  if (s == "inf") return kInf;
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

char separator(TableFormat format) { return format == TableFormat::csv ? ',' : '\t'; }

std::vector<std::string> header_for(TableLayout layout) {
  switch (layout) {
    case TableLayout::mixed:
      return {"n", "m", "eta", "t"};
    case TableLayout::primes_only:
      return {"m", "p", "t"};
    case TableLayout::band:
      return {"m", "p", "t", "t0"};
  }
  return {};
}

std::string join_line(const std::vector<std::string>& cells, TableFormat format) {
  std::string out;
  if (format == TableFormat::markdown) {
    out = "|";
    for (const auto& c : cells) out += " " + c + " |";
    return out;
  }
  const char sep = separator(format);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

std::vector<std::string> split_line(std::string_view line, TableFormat format) {
  if (format != TableFormat::markdown) return split(trim(line), separator(format));
  line = trim(line);
  if (line.size() < 2 || line.front() != '|' || line.back() != '|') return {};
  auto cells = split(line.substr(1, line.size() - 2), '|');
  for (auto& c : cells) c = std::string(trim(c));
  return cells;
}

}  // namespace

TableFormat parse_format(std::string_view name) {
  if (name == "tsv") return TableFormat::tsv;
  if (name == "csv") return TableFormat::csv;
  if (name == "markdown" || name == "md") return TableFormat::markdown;
  throw std::invalid_argument("unknown table format '" + std::string(name) + "'");
}

TableLayout parse_layout(std::string_view name) {
  if (name == "mixed") return TableLayout::mixed;
  if (name == "primes_only" || name == "primes") return TableLayout::primes_only;
  if (name == "band") return TableLayout::band;
  throw std::invalid_argument("unknown table layout '" + std::string(name) + "'");
}

std::string format_t(double t) {
  if (std::isinf(t)) return "inf";
  return fmt::format("{:.10f}", t);
}

std::vector<NaturalRow> generate_rows(const Sieve& sieve, std::uint64_t n_from, std::uint64_t n_to) {
  if (n_from < 1 || n_from > n_to || n_to > sieve.limit()) {
    throw DomainError(fmt::format("generate_rows: range [{}, {}] outside [1, {}]", n_from, n_to,
                                  sieve.limit()));
  }
  std::vector<NaturalRow> rows;
  rows.reserve(n_to - n_from + 1);
  for (std::uint64_t n = n_from; n <= n_to; ++n) {
    const auto tv = t_for(sieve, n);
    rows.push_back({n, tv.kind, tv.ordinal, tv.t});
  }
  return rows;
}

std::vector<NaturalRow> generate_prime_rows(const Sieve& sieve, std::uint64_t m_from,
                                            std::uint64_t m_to) {
  if (m_from < 1 || m_from > m_to || m_to > sieve.primes().size()) {
    throw DomainError(fmt::format("generate_prime_rows: ordinals [{}, {}] outside [1, {}]", m_from,
                                  m_to, sieve.primes().size()));
  }
  std::vector<NaturalRow> rows;
  rows.reserve(m_to - m_from + 1);
  for (std::uint64_t m = m_from; m <= m_to; ++m) {
    const auto p = sieve.nth_prime(m);
    rows.push_back({p, NumberKind::prime, m, t_prime(m, p).t});
  }
  return rows;
}

std::string emit_table(const std::vector<NaturalRow>& rows, TableFormat format, TableLayout layout) {
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows) {
    const auto t = format_t(r.t);
    const auto ord = std::to_string(r.ordinal);
    switch (layout) {
      case TableLayout::mixed:
        body.push_back({std::to_string(r.n), r.kind == NumberKind::prime ? ord : "",
                        r.kind == NumberKind::nonprime ? ord : "", t});
        break;
      case TableLayout::primes_only:
        if (r.kind == NumberKind::prime) body.push_back({ord, std::to_string(r.n), t});
        break;
      case TableLayout::band:
        if (r.kind == NumberKind::prime) {
          body.push_back({ord, std::to_string(r.n), t, format_t(t_band(r.n).t0)});
        }
        break;
    }
  }
  if (body.empty()) throw std::invalid_argument("emit_table: no rows to emit for this layout");

  const auto header = header_for(layout);
  std::string out = join_line(header, format) + "\n";
  if (format == TableFormat::markdown) {
    out += join_line(std::vector<std::string>(header.size(), "---"), format) + "\n";
  }
  for (const auto& cells : body) out += join_line(cells, format) + "\n";
  return out;
}

std::vector<NaturalRow> parse_table(std::string_view text, TableFormat format, TableLayout layout) {
  const auto header = header_for(layout);
  std::vector<NaturalRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_line(line, format);
    if (!seen_header) {
      if (cells != header) throw ParseError("table", line_no, "unexpected header");
      seen_header = true;
      continue;
    }
    if (format == TableFormat::markdown && !cells.empty() && cells.front() == "---") continue;
    if (cells.size() != header.size()) throw ParseError("table", line_no, "wrong column count");

    NaturalRow row{};
    std::optional<double> t;
    if (layout == TableLayout::mixed) {
      const auto n = to_u64(cells[0]);
      const auto m = to_u64(cells[1]);
      const auto eta = to_u64(cells[2]);
      t = to_t(cells[3]);
      if (!n || (m.has_value() == eta.has_value())) {
        throw ParseError("table", line_no, "need N and exactly one of m, eta");
      }
      row = {*n, m ? NumberKind::prime : NumberKind::nonprime, m ? *m : *eta, 0.0};
    } else {
      const auto m = to_u64(cells[0]);
      const auto p = to_u64(cells[1]);
      t = to_t(cells[2]);
      if (!m || !p) throw ParseError("table", line_no, "bad ordinal or prime");
      row = {*p, NumberKind::prime, *m, 0.0};
    }
    if (!t) throw ParseError("table", line_no, "bad t value");
    row.t = *t;
    rows.push_back(row);
  }
  if (!seen_header) throw ParseError("table", line_no, "missing header");
  return rows;
}

// ---------------------------------------------------------------------------

const char* to_string(DiffStatus status) noexcept {
  switch (status) {
    case DiffStatus::match:
      return "match";
    case DiffStatus::erratum:
      return "erratum";
    case DiffStatus::unresolved:
      return "unresolved";
  }
  return "?";
}

const char* to_string(ErratumClass cls) noexcept {
  switch (cls) {
    case ErratumClass::label:
      return "label";
    case ErratumClass::next_prime:
      return "next_prime";
    case ErratumClass::ordinal_shift:
      return "ordinal_shift";
    case ErratumClass::duplicate:
      return "duplicate";
    case ErratumClass::digit:
      return "digit";
    case ErratumClass::misprint:
      return "misprint";
  }
  return "?";
}

namespace {

bool known_table(std::string_view id) {
  return id == "mixed" || id == "primes" || id == "band_t" || id == "band_t0";
}

std::optional<ErratumClass> parse_class(std::string_view s) {
  for (auto c : {ErratumClass::label, ErratumClass::next_prime, ErratumClass::ordinal_shift,
                 ErratumClass::duplicate, ErratumClass::digit, ErratumClass::misprint}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

}  // namespace

std::vector<GoldenRow> parse_golden(std::istream& in, const std::string& source) {
  std::vector<GoldenRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(trim(line), '\t');
    if (!seen_header) {
      const std::vector<std::string> expected{"table_id", "n", "kind", "ordinal", "t_printed"};
      if (cells != expected) throw ParseError(source, line_no, "unexpected golden header");
      seen_header = true;
      continue;
    }
    if (cells.size() != 5) throw ParseError(source, line_no, "expected 5 tab-separated columns");
    if (!known_table(cells[0])) throw ParseError(source, line_no, "unknown table id " + cells[0]);
    const auto n = to_u64(cells[1]);
    if (!n || *n == 0) throw ParseError(source, line_no, "bad n");
    const auto& kind = cells[2];
    if (kind != "prime" && kind != "nonprime" && kind != "both" && kind != "none") {
      throw ParseError(source, line_no, "bad kind " + kind);
    }
    if (cells[0] != "mixed" && (kind != "prime" || !to_u64(cells[3]))) {
      throw ParseError(source, line_no, "prime tables need kind=prime and a numeric ordinal");
    }
    if (!to_t(cells[4])) throw ParseError(source, line_no, "bad t_printed " + cells[4]);
    rows.push_back({cells[0], *n, kind, cells[3], cells[4], line_no});
  }
  if (!seen_header) throw ParseError(source, line_no, "missing golden header");
  return rows;
}

std::vector<GoldenRow> load_golden(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path.string());
  return parse_golden(in, path.string());
}

std::vector<ErratumEntry> parse_ledger(std::istream& in, const std::string& source) {
  std::vector<ErratumEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto cells = split(trimmed, '\t');
    if (!seen_header) {
      const std::vector<std::string> expected{"table_id", "from", "to", "class", "ref", "note"};
      if (cells != expected) throw ParseError(source, line_no, "unexpected ledger header");
      seen_header = true;
      continue;
    }
    if (cells.size() != 6) throw ParseError(source, line_no, "expected 6 tab-separated columns");
    if (!known_table(cells[0])) throw ParseError(source, line_no, "unknown table id " + cells[0]);
    const auto from = to_u64(cells[1]);
    const auto to = to_u64(cells[2]);
    if (!from || !to || *from > *to) throw ParseError(source, line_no, "bad locator range");
    const auto cls = parse_class(cells[3]);
    if (!cls) throw ParseError(source, line_no, "unknown erratum class " + cells[3]);
    std::optional<std::uint64_t> ref;
    if (*cls == ErratumClass::duplicate) {
      ref = to_u64(cells[4]);
      if (!ref) throw ParseError(source, line_no, "duplicate entries need a numeric ref");
    }
    if (trim(cells[5]).empty()) throw ParseError(source, line_no, "every erratum needs a note");
    entries.push_back({cells[0], *from, *to, *cls, ref, cells[5], line_no});
  }
  if (!seen_header) throw ParseError(source, line_no, "missing ledger header");
  return entries;
}

std::vector<ErratumEntry> load_ledger(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open erratum ledger " + path.string());
  return parse_ledger(in, path.string());
}

namespace {

// Recomputation for one locator of one printed table.
struct Expected {
  double t = 0.0;
  std::uint64_t prime_ordinal = 0;  // 0 when the row is not a prime
  std::uint64_t prime = 0;
  std::string kind;
  std::string ordinal;
  std::uint64_t printed_subject = 0;  // p_m for prime tables, N for mixed
};

Expected expected_for(const Sieve& sieve, const std::string& table_id, std::uint64_t locator) {
  Expected e;
  if (table_id == "mixed") {
    const auto cls = sieve.classify(locator);
    const auto tv = t_for(sieve, locator);
    e.t = tv.t;
    e.kind = to_string(cls.kind);
    e.ordinal = std::to_string(cls.ordinal);
    e.printed_subject = locator;
    if (cls.kind == NumberKind::prime) {
      e.prime_ordinal = cls.ordinal;
      e.prime = locator;
    }
    return e;
  }
  const auto p = sieve.nth_prime(locator);
  e.prime_ordinal = locator;
  e.prime = p;
  e.kind = "prime";
  e.ordinal = std::to_string(locator);
  e.printed_subject = p;
  e.t = table_id == "band_t0" ? t_band(p).t0 : t_prime(locator, p).t;
  return e;
}

bool one_digit_apart(double printed, double recomputed) {
  const auto a = format_t(printed);
  const auto b = format_t(recomputed);
  if (a.size() != b.size()) return false;
  std::size_t differing = 0;
  for (std::size_t i = 0; i < a.size(); ++i) differing += a[i] != b[i];
  return differing == 1;
}

}  // namespace

GoldenReport compare_golden(const Sieve& sieve, const std::vector<GoldenRow>& rows,
                            const std::vector<ErratumEntry>& ledger, double tolerance) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("compare_golden: tolerance must be positive");

  GoldenReport report;
  std::vector<bool> used(ledger.size(), false);
  std::map<std::pair<std::string, std::uint64_t>, double> cache;
  const auto recomputed_at = [&](const std::string& table, std::uint64_t loc) {
    auto key = std::make_pair(table, loc);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const double v = expected_for(sieve, table, loc).t;
    cache.emplace(std::move(key), v);
    return v;
  };

  for (const auto& row : rows) {
    const std::uint64_t locator =
        row.table_id == "mixed" ? row.n : to_u64(row.ordinal).value_or(0);
    const auto expected = expected_for(sieve, row.table_id, locator);
    const double printed = to_t(row.t_printed).value();

    const bool both_inf = std::isinf(printed) && std::isinf(expected.t);
    const double delta = both_inf ? 0.0 : std::abs(printed - expected.t);
    const bool value_ok = both_inf || delta <= tolerance;
    const bool label_ok = row.kind == expected.kind && row.ordinal == expected.ordinal &&
                          row.n == expected.printed_subject;

    GoldenDiff diff{row.table_id, locator, row.t_printed, expected.t, delta, DiffStatus::match, ""};
    if (value_ok && label_ok) {
      report.summary.max_matched_delta = std::max(report.summary.max_matched_delta, delta);
      report.diffs.push_back(std::move(diff));
      continue;
    }

    bool value_explained = value_ok;
    bool label_explained = label_ok;
    std::string notes;
    for (std::size_t i = 0; i < ledger.size(); ++i) {
      const auto& entry = ledger[i];
      if (entry.table_id != row.table_id || locator < entry.from || locator > entry.to) continue;
      bool confirms = false;
      switch (entry.cls) {
        case ErratumClass::label:
          confirms = !label_ok;
          label_explained = label_explained || confirms;
          break;
        case ErratumClass::next_prime:
          confirms = !value_ok && expected.prime_ordinal > 0 &&
                     expected.prime_ordinal < sieve.primes().size() &&
                     std::abs(printed - t_prime(expected.prime_ordinal,
                                                sieve.nth_prime(expected.prime_ordinal + 1))
                                            .t) <= tolerance;
          break;
        case ErratumClass::ordinal_shift:
          confirms = !value_ok && expected.prime_ordinal > 0 &&
                     std::abs(printed - t_prime(expected.prime_ordinal + 1, expected.prime).t) <=
                         tolerance;
          break;
        case ErratumClass::duplicate:
          confirms = !value_ok && entry.ref &&
                     std::abs(printed - recomputed_at(row.table_id, *entry.ref)) <= tolerance;
          break;
        case ErratumClass::digit:
          confirms = !value_ok && one_digit_apart(printed, expected.t);
          break;
        case ErratumClass::misprint:
          confirms = !value_ok;
          break;
      }
      if (entry.cls != ErratumClass::label) value_explained = value_explained || confirms;
      if (confirms) {
        used[i] = true;
        if (!notes.empty()) notes += "; ";
        notes += std::string(to_string(entry.cls)) + ": " + entry.note;
      }
    }

    if (value_explained && label_explained) {
      diff.status = DiffStatus::erratum;
      diff.note = notes;
    } else {
      diff.status = DiffStatus::unresolved;
      diff.note = !value_explained ? "printed value not explained by the ledger"
                                   : "printed label not explained by the ledger";
      if (!notes.empty()) diff.note += " (" + notes + ")";
    }
    report.diffs.push_back(std::move(diff));
  }

  for (const auto& d : report.diffs) {
    ++report.summary.rows;
    switch (d.status) {
      case DiffStatus::match:
        ++report.summary.matched;
        break;
      case DiffStatus::erratum:
        ++report.summary.errata;
        break;
      case DiffStatus::unresolved:
        ++report.summary.unresolved;
        break;
    }
  }
  for (std::size_t i = 0; i < ledger.size(); ++i) {
    const bool in_scope = std::any_of(rows.begin(), rows.end(), [&](const GoldenRow& r) {
      return r.table_id == ledger[i].table_id;
    });
    if (in_scope && !used[i]) report.summary.stale_entries.push_back(ledger[i].line);
  }
  return report;
}

}  // namespace primetab
