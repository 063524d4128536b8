#include "primetab/tvalue.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primetab/error.hpp"

namespace primetab {

namespace {

double pronic(std::uint64_t k) {
  const auto x = static_cast<double>(k);
  return x * (x + 1.0);
}

}  // namespace

TValue t_prime(std::uint64_t m, std::uint64_t p) {
  if (p < 2) throw DomainError("t_prime: p must be at least 2");
  if (m == 0) throw DomainError("t_prime: ordinal m starts at 1");
  if (!is_prime_trial(p)) throw DomainError("t_prime: " + std::to_string(p) + " is not prime");
  const double arg = std::sqrt(static_cast<double>(p)) / pronic(m);
  if (arg > 1.0) {
    throw DomainError("t_prime: sqrt(" + std::to_string(p) + ") exceeds m(m+1) for m=" +
                      std::to_string(m));
  }
  return {p, m, std::acos(-arg) / std::log(static_cast<double>(p)), NumberKind::prime};
}

TValue t_nonprime(std::uint64_t eta, std::uint64_t c) {
  if (eta == 0) throw DomainError("t_nonprime: ordinal eta starts at 1");
  if (c == 0) throw DomainError("t_nonprime: c must be at least 1");
  if (c == 1) {
    if (eta != 1) throw DomainError("t_nonprime: 1 is the first non-prime (eta = 1)");
    return {1, 1, std::numeric_limits<double>::infinity(), NumberKind::nonprime};
  }
  if (is_prime_trial(c)) {
    throw DomainError("t_nonprime: " + std::to_string(c) + " is prime");
  }
  const double arg = std::sqrt(static_cast<double>(c)) / pronic(eta);
  if (arg > 1.0) {
    throw DomainError("t_nonprime: sqrt(" + std::to_string(c) + ") exceeds eta(eta+1) for eta=" +
                      std::to_string(eta));
  }
  return {c, eta, std::acos(arg) / std::log(static_cast<double>(c)), NumberKind::nonprime};
}

TValue t_for(const Sieve& sieve, std::uint64_t n) {
  const auto cls = sieve.classify(n);
  return cls.kind == NumberKind::prime ? t_prime(cls.ordinal, n) : t_nonprime(cls.ordinal, n);
}

FValue f_value(std::uint64_t p, double t) {
  if (p == 0) throw DomainError("f_value: p must be positive");
  const double c = std::cos(t * std::log(static_cast<double>(p)));
  if (std::abs(c) < kSingularCos) {
    throw SingularityError("f_value: cos(t ln p) vanishes (interrupted point) at p=" +
                           std::to_string(p));
  }
  return {p, t, std::sqrt(static_cast<double>(p)) / c};
}

double star_residual(std::uint64_t m, std::uint64_t p, double t) {
  return pronic(m) + f_value(p, t).f;
}

double m_from_f(double f) {
  const double disc = 1.0 - 4.0 * f;
  if (disc < 0.0) {
    throw DomainError("m_from_f: negative discriminant 1 - 4F (t below the interrupted point)");
  }
  return (-1.0 + std::sqrt(disc)) / 2.0;
}

double m_from_pt(std::uint64_t p, double t) { return m_from_f(f_value(p, t).f); }

TBand t_band(std::uint64_t p) {
  if (p < 2) throw DomainError("t_band: p must be at least 2");
  const double t0 = std::numbers::pi / (2.0 * std::log(static_cast<double>(p)));
  return {p, t0, 2.0 * t0};
}

bool band_membership(const TValue& entry) {
  if (entry.kind != NumberKind::prime) {
    throw std::invalid_argument("band_membership: defined for prime entries only");
  }
  const auto band = t_band(entry.subject);
  return band.t0 < entry.t && entry.t < band.arrest;
}

std::vector<LimitPoint> limit_profile(const Sieve& sieve, std::uint64_t m_max) {
  if (m_max > sieve.primes().size()) {
    throw DomainError("limit_profile: m_max beyond sieve range");
  }
  std::vector<LimitPoint> out;
  out.reserve(m_max);
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    const auto p = sieve.nth_prime(m);
    const double t = t_prime(m, p).t;
    const double t0 = t_band(p).t0;
    out.push_back({m, t / t0, t - t0});
  }
  return out;
}

double recurrence_shift(const RecurrenceQuery& q, Direction direction) {
  if (q.k < 1) throw std::invalid_argument("recurrence_shift: k must be >= 1");
  const double disc = 1.0 - 4.0 * q.f_start;
  if (disc < 0.0) throw DomainError("recurrence_shift: negative discriminant 1 - 4F");
  const double k = static_cast<double>(q.k);
  const double root = std::sqrt(disc);
  // sqrt(1 - 4F) = 2m + 1 on the locus, so both directions are exact shifts of m.
  if (direction == Direction::forward) return q.f_start - k * root - k * k;
  return q.f_start + k * root - k * k;
}

double recurrence_backward_plus_k2(const RecurrenceQuery& q) {
  if (q.k < 1) throw std::invalid_argument("recurrence_backward_plus_k2: k must be >= 1");
  const double disc = 1.0 - 4.0 * q.f_start;
  if (disc < 0.0) throw DomainError("recurrence_backward_plus_k2: negative discriminant 1 - 4F");
  const double k = static_cast<double>(q.k);
  return q.f_start + k * std::sqrt(disc) + k * k;
}

std::vector<AdmissiblePair> admissible_primes(const Sieve& sieve, std::uint64_t m,
                                              std::uint64_t search_limit) {
  if (m == 0) throw DomainError("admissible_primes: ordinal m starts at 1");
  if (search_limit > sieve.limit()) {
    throw DomainError("admissible_primes: search limit beyond sieve range");
  }
  const double cap = pronic(m);
  std::vector<AdmissiblePair> out;
  for (const auto p : sieve.primes()) {
    if (p > search_limit || std::sqrt(static_cast<double>(p)) > cap) break;
    out.push_back({p, t_prime(m, p).t});
  }
  return out;
}

PiDemo pi_via_star(const Sieve& sieve, std::uint64_t x) {
  if (x < 2) throw DomainError("pi_via_star: x must be at least 2");
  const auto count = sieve.count_primes_below(x);
  const auto p = sieve.nth_prime(count);
  const double t = t_prime(count, p).t;
  const double m_real = m_from_pt(p, t);
  const auto m = static_cast<std::uint64_t>(std::llround(m_real));
  return {x, p, t, m_real, m, std::abs(m_real - static_cast<double>(m)) > 1e-3};
}

}  // namespace primetab
