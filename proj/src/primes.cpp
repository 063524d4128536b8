#include "primetab/primes.hpp"

#include <algorithm>
#include <string>

#include "primetab/error.hpp"

namespace primetab {

const char* to_string(NumberKind kind) noexcept {
  return kind == NumberKind::prime ? "prime" : "nonprime";
}

bool is_prime_trial(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Sieve::Sieve(std::uint64_t limit) : limit_(limit) {
  if (limit > kMaxSieveLimit) {
    throw DomainError("sieve limit " + std::to_string(limit) + " exceeds maximum " +
                      std::to_string(kMaxSieveLimit));
  }
  composite_.assign(limit + 1, false);
  composite_[0] = true;
  if (limit >= 1) composite_[1] = true;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
  }
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite_[i]) primes_.push_back(i);
  }
}

void Sieve::check_range(std::uint64_t n) const {
  if (n > limit_) {
    throw DomainError(std::to_string(n) + " is beyond the sieve limit " + std::to_string(limit_));
  }
}

bool Sieve::is_prime(std::uint64_t n) const {
  check_range(n);
  return !composite_[n];
}

std::uint64_t Sieve::count_primes_below(std::uint64_t x) const {
  check_range(x);
  return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), x) -
                                    primes_.begin());
}

std::uint64_t Sieve::count_nonprimes_below(std::uint64_t x) const {
  return x - count_primes_below(x);
}

Classification Sieve::classify(std::uint64_t n) const {
  if (n == 0) throw DomainError("classify: 0 is not a natural number here");
  check_range(n);
  if (!composite_[n]) return {n, NumberKind::prime, count_primes_below(n)};
  return {n, NumberKind::nonprime, count_nonprimes_below(n)};
}

std::uint64_t Sieve::nth_prime(std::uint64_t m) const {
  if (m == 0 || m > primes_.size()) {
    throw DomainError("prime ordinal " + std::to_string(m) + " outside sieve (" +
                      std::to_string(primes_.size()) + " primes)");
  }
  return primes_[m - 1];
}

std::uint64_t Sieve::nth_nonprime(std::uint64_t eta) const {
  if (eta == 0 || eta > count_nonprimes_below(limit_)) {
    throw DomainError("non-prime ordinal " + std::to_string(eta) + " outside sieve");
  }
  // The eta-th non-prime c satisfies c - pi(c) = eta; search the smallest such c.
  std::uint64_t lo = eta;
  std::uint64_t hi = limit_;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (count_nonprimes_below(mid) >= eta) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::vector<PrimeEntry> sieve_primes(std::uint64_t limit) {
  if (limit < 2) throw DomainError("sieve_primes: limit must be at least 2");
  const Sieve sieve(limit);
  std::vector<PrimeEntry> out;
  out.reserve(sieve.primes().size());
  std::uint64_t m = 0;
  for (const auto p : sieve.primes()) out.push_back({++m, p});
  return out;
}

}  // namespace primetab
