#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "primetab/error.hpp"
#include "primetab/report.hpp"

using namespace primetab;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

RunConfig default_config() {
  RunConfig cfg;
  cfg.golden_dir = PRIMETAB_DATA_DIR;
  return cfg;
}

}  // namespace

TEST_CASE("check status follows residual and tolerance") {
  CHECK(make_check("a", 1.0, 1.0, 0.0, 0.0).status == CheckStatus::pass);
  CHECK(make_check("a", 1.0, 1.0, 1e-9, 1e-9).status == CheckStatus::pass);
  CHECK(make_check("a", 1.0, 1.0, 2e-9, 1e-9).status == CheckStatus::fail);
  CHECK(make_finding("a", 1.0, 0.0, 1.0, 0.0).status == CheckStatus::reported_finding);
}

TEST_CASE("line grammar") {
  CHECK(render(make_check("x", 0.5, std::monostate{}, 0.0, 1e-8)) ==
        "CHECK x pass computed=0.5 ref=none residual=0 tol=1e-08");
  CHECK(render(make_finding("z", std::complex<double>(1.0, -2.0), std::complex<double>(0.0, 0.0), 2.5, 0.0)) ==
        "CHECK z reported-finding computed=1-2i ref=0+0i residual=2.5 tol=0");
}

TEST_CASE("exit status") {
  VerifyReport report;
  CHECK(report.exit_status() == 1);
  report.records.push_back(make_finding("f", 1.0, 0.0, 1.0, 0.0));
  CHECK(report.exit_status() == 0);
  report.records.push_back(make_check("c", 1.0, 0.0, 1.0, 0.0));
  CHECK(report.exit_status() == 1);
}

TEST_CASE("config validation and files") {
  auto cfg = default_config();
  CHECK_NOTHROW(cfg.validate());
  cfg.table_tolerance = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);

  cfg = default_config();
  const auto good = write_temp("primetab_good.conf", "# comment\nlimit = 200000\ntol=1e-9\nterm-limit=100000\n");
  apply_config_file(good, cfg);
  CHECK(cfg.sieve_limit == 200000);
  CHECK(cfg.table_tolerance == 1e-9);
  CHECK(cfg.truncation.term_limit == 100000);

  const auto unknown = write_temp("primetab_bad.conf", "limit=10\ncolour=blue\n");
  CHECK_THROWS_AS(apply_config_file(unknown, cfg), ConfigError);
  const auto junk = write_temp("primetab_junk.conf", "limit=ten\n");
  CHECK_THROWS_AS(apply_config_file(junk, cfg), ConfigError);
  CHECK_THROWS_AS(apply_config_file("/nonexistent/primetab.conf", cfg), ConfigError);
  CHECK_THROWS_AS(parse_suite("everything"), ConfigError);
}

TEST_CASE("every suite reports and passes with defaults") {
  const auto cfg = default_config();
  for (const auto suite : {Suite::tables, Suite::identities, Suite::corollaries, Suite::zeros}) {
    const auto report = run_verify(cfg, suite);
    CHECK_FALSE(report.records.empty());
    CHECK(report.exit_status() == 0);
  }
}

TEST_CASE("reports are deterministic") {
  const auto cfg = default_config();
  CHECK(run_verify(cfg, Suite::all).text() == run_verify(cfg, Suite::all).text());
}

TEST_CASE("a damaged golden file fails the tables suite") {
  const auto dir = std::filesystem::temp_directory_path() / "primetab_golden_damaged";
  std::filesystem::create_directories(dir);
  const std::filesystem::path src = PRIMETAB_DATA_DIR;
  for (const char* f : {"mixed.tsv", "band.tsv", "errata.tsv"}) {
    std::filesystem::copy_file(src / f, dir / f, std::filesystem::copy_options::overwrite_existing);
  }
  std::ifstream in(src / "primes.tsv");
  std::ofstream out(dir / "primes.tsv");
  std::string line;
  int i = 0;
  while (std::getline(in, line)) {
    if (i++ == 25) line = "primes\t97\tprime\t25\t0.3466774199";
    out << line << "\n";
  }
  out.close();
  auto cfg = default_config();
  cfg.golden_dir = dir;
  const auto report = run_verify(cfg, Suite::tables);
  CHECK(report.exit_status() == 1);
}
