#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "primetab/error.hpp"
#include "primetab/primes.hpp"
#include "primetab/tvalue.hpp"

using namespace primetab;

namespace {

// Long double reference, computed independently of the library.
long double ref_t(long double s, long double ord, long double base, long double sign) {
  return std::acos(sign * std::sqrt(s) / (ord * (ord + 1))) / std::log(base);
}

const Sieve& sieve() {
  static const Sieve s(100000);
  return s;
}

}  // namespace

TEST_CASE("printed table values") {
  // Printed to ten decimals in the source tables; the last digit is not always rounded.
  CHECK(std::abs(t_prime(1, 2).t - 3.3992701060) <= 5e-10);
  CHECK(std::abs(t_prime(2, 3).t - 1.6963574120) <= 5e-10);
  CHECK(std::abs(t_nonprime(2, 4).t - 0.8879495235) <= 5e-10);
  CHECK(std::abs(t_nonprime(3, 6).t - 0.7619479172) <= 5e-10);
  CHECK(std::abs(t_nonprime(5, 9).t - 0.6693120589) <= 5e-10);
  CHECK(std::abs(t_prime(25, 97).t - 0.3466774192) <= 5e-10);
  CHECK(std::abs(t_band(3).t0 - 1.4298004340) <= 5e-10);
}

TEST_CASE("closed forms against long double") {
  for (std::uint64_t m = 1; m <= 2000; ++m) {
    const auto p = sieve().nth_prime(m);
    const auto ref = ref_t(p, m, p, -1.0L);
    REQUIRE(std::abs(t_prime(m, p).t - static_cast<double>(ref)) < 1e-14);
  }
  for (std::uint64_t eta = 2; eta <= 2000; ++eta) {
    const auto c = sieve().nth_nonprime(eta);
    const auto ref = ref_t(c, eta, c, 1.0L);
    REQUIRE(std::abs(t_nonprime(eta, c).t - static_cast<double>(ref)) < 1e-14);
  }
}

TEST_CASE("non-prime 1 carries the sentinel") {
  const auto v = t_nonprime(1, 1);
  CHECK(v.is_sentinel());
  CHECK(t_for(sieve(), 1).is_sentinel());
  CHECK_THROWS_AS(t_nonprime(2, 1), DomainError);
}

TEST_CASE("t_for dispatches on classification") {
  CHECK(t_for(sieve(), 2).t == t_prime(1, 2).t);
  CHECK(t_for(sieve(), 9).t == t_nonprime(5, 9).t);
  CHECK(t_for(sieve(), 9).kind == NumberKind::nonprime);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(t_prime(0, 2), DomainError);
  CHECK_THROWS_AS(t_prime(1, 1), DomainError);
  CHECK_THROWS_AS(t_prime(3, 9), DomainError);
  CHECK_THROWS_AS(t_nonprime(3, 7), DomainError);
  CHECK_THROWS_AS(f_value(7, std::numbers::pi / (2.0 * std::log(7.0))), SingularityError);
  CHECK_THROWS_AS(m_from_f(1.0), DomainError);
  CHECK_THROWS_AS(recurrence_shift({-2.0, 0}, Direction::forward), std::invalid_argument);
  CHECK_THROWS_AS(band_membership(t_nonprime(2, 4)), std::invalid_argument);
}

TEST_CASE("relation holds on the table and inverts") {
  for (std::uint64_t m = 1; m <= 3000; ++m) {
    const auto p = sieve().nth_prime(m);
    const double t = t_prime(m, p).t;
    const double md = static_cast<double>(m);
    REQUIRE(std::abs(star_residual(m, p, t)) <= 1e-9 * md * (md + 1));
    REQUIRE(std::abs(f_value(p, t).f + md * (md + 1)) <= 1e-9 * md * (md + 1));
    REQUIRE(m_from_pt(p, t) == doctest::Approx(md).epsilon(1e-9));
  }
}

TEST_CASE("band membership and limit") {
  for (std::uint64_t m = 1; m <= 1000; ++m) {
    const auto p = sieve().nth_prime(m);
    const auto v = t_prime(m, p);
    const auto b = t_band(p);
    REQUIRE(b.t0 == doctest::Approx(std::numbers::pi / (2.0 * std::log(static_cast<double>(p)))));
    REQUIRE(b.arrest == doctest::Approx(2.0 * b.t0));
    REQUIRE(v.t > b.t0);
    REQUIRE(v.t < b.arrest);
    REQUIRE(band_membership(v));
  }
  const auto profile = limit_profile(sieve(), 1000);
  REQUIRE(profile.size() == 1000);
  CHECK(profile.front().ratio == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(profile.front().difference == doctest::Approx(1.133090035457).epsilon(1e-11));
  CHECK(profile.back().difference == doctest::Approx(9.90304816831e-6).epsilon(1e-6));
  for (std::size_t i = 1; i < profile.size(); ++i) {
    REQUIRE(profile[i].difference < profile[i - 1].difference);
  }
}

TEST_CASE("recurrence walks the pronic numbers") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const auto m = std::uniform_int_distribution<std::int64_t>(1, 5000)(rng);
    const auto k = std::uniform_int_distribution<std::int64_t>(1, 5000)(rng);
    const double f = -static_cast<double>(m) * static_cast<double>(m + 1);
    const double g = -static_cast<double>(m + k) * static_cast<double>(m + k + 1);
    REQUIRE(recurrence_shift({f, k}, Direction::forward) == doctest::Approx(g).epsilon(1e-12));
    REQUIRE(recurrence_shift({g, k}, Direction::backward) == doctest::Approx(f).epsilon(1e-12));
  }
}

TEST_CASE("backward step as printed misses by 2k^2") {
  for (std::int64_t k = 1; k <= 5; ++k) {
    const double f = -30.0 * 31.0;
    const double back = recurrence_shift({f, k}, Direction::backward);
    CHECK(recurrence_backward_plus_k2({f, k}) - back == doctest::Approx(2.0 * k * k));
  }
}

TEST_CASE("admissible primes are not unique") {
  // sqrt(p) <= 6 means p <= 36: eleven primes.
  const auto pairs = admissible_primes(sieve(), 2, 36);
  REQUIRE(pairs.size() == 11);
  for (const auto& pair : pairs) {
    CHECK(std::abs(star_residual(2, pair.p, pair.t)) < 1e-9);
    CHECK(pair.t > t_band(pair.p).t0);
  }
  CHECK_THROWS_AS(admissible_primes(sieve(), 2, 200000), DomainError);
}

TEST_CASE("pi(x) via the relation") {
  for (const std::uint64_t x : {2, 10, 100, 1000, 7919, 50000}) {
    const auto demo = pi_via_star(sieve(), x);
    CHECK(demo.m == sieve().count_primes_below(x));
    CHECK_FALSE(demo.rounding_warning);
  }
}
