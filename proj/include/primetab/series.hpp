#pragma once

// Truncated Dirichlet series and the related expansions of log zeta:
// real-axis zeta partial sums, the prime zeta function, the Euler product,
// the prime-power and Mercator expansions of log zeta, the residuals of the
// power-matching identities, the critical-line cosine sum over primes, the
// prime / non-prime partition of zeta, and the Basel / sine-product checks.

#include <complex>
#include <cstdint>
#include <vector>

#include "primetab/primes.hpp"

namespace primetab {

struct TruncationSpec {
  std::uint64_t term_limit = 1'000'000;  // n, p, c <= term_limit
  std::uint32_t mu_max = 20;             // highest prime-power order
  std::uint32_t mercator_order = 40;     // highest power of (zeta - 1)

  /// Throws ConfigError if any field is zero.
  void validate() const;
};

struct ComplexPoint {
  double sigma;
  double t;

  std::complex<double> value() const { return {sigma, t}; }
};

struct PrimeZetaPartial {
  double value;          // sum over p <= X of p^-sigma
  double tail_bound;     // rigorous: sum over n > X of n^-sigma >= omitted prime terms
  double tail_estimate;  // E1((sigma - 1) ln X), the prime-density estimate of the omitted terms
};

struct SeriesTriplet {
  std::complex<double> omega;   // primes
  std::complex<double> zeta;    // all n
  std::complex<double> lambda;  // 1 and composites
  std::uint64_t cutoff;
};

struct TracePoint {
  std::uint64_t cutoff;
  double partial;
};

struct CosineSumTrace {
  double value;
  std::vector<TracePoint> trace;
};

struct BaselCheck {
  std::uint64_t n_terms;
  double partial;            // sum 1/k^2
  double coeff_lhs;          // 1/3!
  double coeff_rhs_partial;  // sum 1/(k pi)^2
};

/// sum_{n<=X} n^-sigma with an Euler-Maclaurin tail; sigma > 1.
double zeta_real_partial(double sigma, const TruncationSpec& spec);

/// Raw truncated prime zeta P_X(sigma). Requires sieve.limit() >= term_limit.
PrimeZetaPartial prime_zeta_partial(const Sieve& sieve, double sigma, const TruncationSpec& spec);

/// integral_X^inf x^-sigma / ln x dx = E1((sigma - 1) ln X).
double prime_tail_estimate(double sigma, double x);

double euler_product_partial(const Sieve& sieve, double sigma, const TruncationSpec& spec);

/// sum_{mu <= mu_max} P(mu sigma) / mu, each prime sum completed with its tail estimate.
double log_zeta_prime_expansion(const Sieve& sieve, double sigma, const TruncationSpec& spec);

/// sum_{k <= order} (-1)^{k+1} (zeta(sigma) - 1)^k / k. Throws ConvergenceError
/// when |zeta(sigma) - 1| >= 1.
double log_zeta_mercator(double sigma, const TruncationSpec& spec);

/// P_X(mu sigma) + (1 - zeta(sigma))^mu. Would vanish if sum_p p^{-mu s} equalled
/// -(1 - zeta(s))^mu; for mu = 1 it is P_X(sigma) - (zeta(sigma) - 1).
double eq_group_residual(const Sieve& sieve, double sigma, std::uint32_t mu,
                         const TruncationSpec& spec);

/// sum_{p <= X} p^{-1/2} cos(t ln p), with partials at 1-2-5 cutoffs and at X.
CosineSumTrace corollary1_sum(const Sieve& sieve, double t, const TruncationSpec& spec);

/// Raw truncated sums over primes, all n, and non-primes at a shared cutoff.
/// On the critical line these are audit data, not values of zeta.
SeriesTriplet corollary2_triplet(const Sieve& sieve, ComplexPoint s, std::uint64_t cutoff);

BaselCheck basel_partial(std::uint64_t n_terms);

/// prod_{k <= K} (1 - x^2 / (k pi)^2).
double sin_product_partial(double x, std::uint64_t k_factors);

}  // namespace primetab
