#pragma once

// Closed-form t-values attached to primes and non-primes, the relation
//   m^2 + m + sqrt(p) / cos(t ln p) = 0
// that links a prime p_m, its ordinal m and t_m, and the auxiliary band,
// inversion, recurrence and audit operations built on it.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "primetab/primes.hpp"

namespace primetab {

/// t attached to a natural number. For the non-prime 1 the value is the
/// infinity sentinel (see is_sentinel()).
struct TValue {
  std::uint64_t subject;
  std::uint64_t ordinal;
  double t;
  NumberKind kind;

  bool is_sentinel() const noexcept { return t == std::numeric_limits<double>::infinity(); }
};

/// Interrupted point t0 = pi / (2 ln p) and arrest point pi / ln p.
struct TBand {
  std::uint64_t p;
  double t0;
  double arrest;
};

/// F = sqrt(p) / cos(t ln p). On the locus of the relation, F = -m(m+1).
struct FValue {
  std::uint64_t p;
  double t;
  double f;
};

struct RecurrenceQuery {
  double f_start;
  std::int64_t k;
};

enum class Direction { forward, backward };

struct LimitPoint {
  std::uint64_t m;
  double ratio;       // t_m / t0
  double difference;  // t_m - t0
};

struct AdmissiblePair {
  std::uint64_t p;
  double t;
};

struct PiDemo {
  std::uint64_t x;
  std::uint64_t largest_prime;
  double t;
  double m_real;
  std::uint64_t m;
  bool rounding_warning;  // |m_real - m| > 1e-3
};

/// |cos(t ln p)| below this is treated as the interrupted point.
inline constexpr double kSingularCos = 1e-12;

/// t_m = arccos(-sqrt(p) / (m(m+1))) / ln p.
TValue t_prime(std::uint64_t m, std::uint64_t p);

/// t_eta = arccos(+sqrt(c) / (eta(eta+1))) / ln c, with the sentinel for c = 1.
TValue t_nonprime(std::uint64_t eta, std::uint64_t c);

/// Dispatches on the classification of n.
TValue t_for(const Sieve& sieve, std::uint64_t n);

FValue f_value(std::uint64_t p, double t);

/// m^2 + m + F(p, t). Zero exactly on the locus.
double star_residual(std::uint64_t m, std::uint64_t p, double t);

/// Positive root (-1 + sqrt(1 - 4F)) / 2 of m^2 + m + F = 0.
double m_from_f(double f);
double m_from_pt(std::uint64_t p, double t);

TBand t_band(std::uint64_t p);

/// t0 < t < arrest for a prime TValue. Throws std::invalid_argument for non-primes.
bool band_membership(const TValue& entry);

/// (m, t_m / t0, t_m - t0) for m = 1..m_max.
std::vector<LimitPoint> limit_profile(const Sieve& sieve, std::uint64_t m_max);

/// Shifts F by k subscripts: forward gives F_{m+k} from F_m, backward F_m from F_{m+k}.
double recurrence_shift(const RecurrenceQuery& q, Direction direction);

/// Backward step with +k^2 instead of -k^2. Kept for the audit report: it
/// does not invert the forward step (its error is exactly 2k^2 on the locus).
double recurrence_backward_plus_k2(const RecurrenceQuery& q);

/// Every prime p <= search_limit with sqrt(p) <= m(m+1), paired with the t in
/// (t0, 2 t0] that puts (m, p, t) on the locus.
std::vector<AdmissiblePair> admissible_primes(const Sieve& sieve, std::uint64_t m,
                                              std::uint64_t search_limit);

/// pi(x) recovered by inverting the relation at the largest prime <= x.
PiDemo pi_via_star(const Sieve& sieve, std::uint64_t x);

}  // namespace primetab
