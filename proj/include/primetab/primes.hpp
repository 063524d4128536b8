#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace primetab {

enum class NumberKind { prime, nonprime };

const char* to_string(NumberKind kind) noexcept;

/// The m-th prime, m counted from 1.
struct PrimeEntry {
  std::uint64_t m;
  std::uint64_t p;

  friend bool operator==(const PrimeEntry&, const PrimeEntry&) = default;
};

/// The eta-th non-prime. Non-primes are 1 followed by the composites.
struct CompositeEntry {
  std::uint64_t eta;
  std::uint64_t c;

  friend bool operator==(const CompositeEntry&, const CompositeEntry&) = default;
};

/// Kind of a natural number together with its ordinal within that kind
/// (m for primes, eta for non-primes).
struct Classification {
  std::uint64_t n;
  NumberKind kind;
  std::uint64_t ordinal;

  friend bool operator==(const Classification&, const Classification&) = default;
};

inline constexpr std::uint64_t kDefaultSieveLimit = 1'000'000;
inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

/// Trial division. Independent of the sieve; used for argument checks
/// on numbers that may lie outside any sieve.
bool is_prime_trial(std::uint64_t n) noexcept;

/// Eratosthenes over [0, limit]. Immutable after construction, so a single
/// instance can be shared read-only between threads.
class Sieve {
 public:
  explicit Sieve(std::uint64_t limit = kDefaultSieveLimit);

  std::uint64_t limit() const noexcept { return limit_; }

  bool is_prime(std::uint64_t n) const;

  /// All primes <= limit in increasing order.
  std::span<const std::uint64_t> primes() const noexcept { return primes_; }

  /// pi(x): number of primes <= x. x must not exceed limit().
  std::uint64_t count_primes_below(std::uint64_t x) const;

  /// Number of non-primes (1 and composites) <= x.
  std::uint64_t count_nonprimes_below(std::uint64_t x) const;

  Classification classify(std::uint64_t n) const;

  /// p_m. Throws DomainError when m is 0 or beyond the sieve.
  std::uint64_t nth_prime(std::uint64_t m) const;

  /// c_eta, the eta-th non-prime (c_1 = 1, c_2 = 4, ...).
  std::uint64_t nth_nonprime(std::uint64_t eta) const;

 private:
  void check_range(std::uint64_t n) const;

  std::uint64_t limit_;
  std::vector<bool> composite_;
  std::vector<std::uint64_t> primes_;
};

/// Prime table for all primes <= limit. Throws DomainError for limit < 2.
std::vector<PrimeEntry> sieve_primes(std::uint64_t limit);

}  // namespace primetab
