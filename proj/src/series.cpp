#include "primetab/series.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "primetab/error.hpp"
#include "primetab/summation.hpp"

namespace primetab {

namespace {

void require_convergent(double sigma, const char* where) {
  if (!(sigma > 1.0)) {
    throw ConvergenceError(std::string(where) + ": Dirichlet series diverges for sigma <= 1");
  }
}

void require_sieve(const Sieve& sieve, std::uint64_t x, const char* where) {
  if (x > sieve.limit()) {
    throw DomainError(std::string(where) + ": cutoff " + std::to_string(x) +
                      " exceeds sieve limit " + std::to_string(sieve.limit()));
  }
}

// n^-s for s = sigma + i t.
std::complex<double> inverse_power(std::uint64_t n, double sigma, double t) {
  const double ln = std::log(static_cast<double>(n));
  return std::polar(std::exp(-sigma * ln), -t * ln);
}

double raw_prime_sum(const Sieve& sieve, double sigma, std::uint64_t x) {
  PairwiseAccumulator<double> acc;
  for (const auto p : sieve.primes()) {
    if (p > x) break;
    acc.add(std::pow(static_cast<double>(p), -sigma));
  }
  return acc.value();
}

}  // namespace

void TruncationSpec::validate() const {
  if (term_limit == 0 || mu_max == 0 || mercator_order == 0) {
    throw ConfigError("truncation spec: term_limit, mu_max and mercator_order must be >= 1");
  }
}

double zeta_real_partial(double sigma, const TruncationSpec& spec) {
  require_convergent(sigma, "zeta_real_partial");
  spec.validate();
  const std::uint64_t x = spec.term_limit;
  PairwiseAccumulator<double> acc;
  for (std::uint64_t n = 1; n <= x; ++n) acc.add(std::pow(static_cast<double>(n), -sigma));
  const double xd = static_cast<double>(x);
  // Euler-Maclaurin remainder of sum_{n > X}: integral, endpoint and first Bernoulli terms.
  const double tail = std::pow(xd, 1.0 - sigma) / (sigma - 1.0) - 0.5 * std::pow(xd, -sigma) +
                      sigma / 12.0 * std::pow(xd, -sigma - 1.0);
  return acc.value() + tail;
}

double prime_tail_estimate(double sigma, double x) {
  require_convergent(sigma, "prime_tail_estimate");
  if (!(x > 1.0)) throw DomainError("prime_tail_estimate: cutoff must exceed 1");
  // E1(z) = -Ei(-z).
  return -std::expint(-(sigma - 1.0) * std::log(x));
}

PrimeZetaPartial prime_zeta_partial(const Sieve& sieve, double sigma, const TruncationSpec& spec) {
  require_convergent(sigma, "prime_zeta_partial");
  spec.validate();
  require_sieve(sieve, spec.term_limit, "prime_zeta_partial");
  const double xd = static_cast<double>(spec.term_limit);
  const double bound = std::pow(xd, 1.0 - sigma) / (sigma - 1.0);
  const double estimate = spec.term_limit > 1 ? prime_tail_estimate(sigma, xd) : bound;
  return {raw_prime_sum(sieve, sigma, spec.term_limit), bound, estimate};
}

double euler_product_partial(const Sieve& sieve, double sigma, const TruncationSpec& spec) {
  require_convergent(sigma, "euler_product_partial");
  spec.validate();
  require_sieve(sieve, spec.term_limit, "euler_product_partial");
  PairwiseAccumulator<double> log_sum;
  for (const auto p : sieve.primes()) {
    if (p > spec.term_limit) break;
    log_sum.add(-std::log1p(-std::pow(static_cast<double>(p), -sigma)));
  }
  return std::exp(log_sum.value());
}

double log_zeta_prime_expansion(const Sieve& sieve, double sigma, const TruncationSpec& spec) {
  require_convergent(sigma, "log_zeta_prime_expansion");
  spec.validate();
  require_sieve(sieve, spec.term_limit, "log_zeta_prime_expansion");
  const double xd = static_cast<double>(spec.term_limit);
  double total = 0.0;
  // Highest order first: those terms are smallest.
  for (std::uint32_t mu = spec.mu_max; mu >= 1; --mu) {
    const double order_sigma = mu * sigma;
    double prime_sum = raw_prime_sum(sieve, order_sigma, spec.term_limit);
    if (spec.term_limit > 1) prime_sum += prime_tail_estimate(order_sigma, xd);
    total += prime_sum / mu;
  }
  return total;
}

double log_zeta_mercator(double sigma, const TruncationSpec& spec) {
  require_convergent(sigma, "log_zeta_mercator");
  spec.validate();
  const double x = zeta_real_partial(sigma, spec) - 1.0;
  if (std::abs(x) >= 1.0) {
    throw ConvergenceError("log_zeta_mercator: |zeta(sigma) - 1| = " + std::to_string(x) +
                           " lies outside the radius of convergence");
  }
  // Horner form of x - x^2/2 + x^3/3 - ... +- x^K/K.
  double acc = 0.0;
  for (std::uint32_t k = spec.mercator_order; k >= 1; --k) {
    acc = 1.0 / k - x * acc;
  }
  return x * acc;
}

double eq_group_residual(const Sieve& sieve, double sigma, std::uint32_t mu,
                         const TruncationSpec& spec) {
  require_convergent(sigma, "eq_group_residual");
  if (mu == 0) throw DomainError("eq_group_residual: mu must be >= 1");
  spec.validate();
  require_sieve(sieve, spec.term_limit, "eq_group_residual");
  const double lhs = raw_prime_sum(sieve, mu * sigma, spec.term_limit);
  const double one_minus_zeta = 1.0 - zeta_real_partial(sigma, spec);
  return lhs + std::pow(one_minus_zeta, static_cast<double>(mu));
}

CosineSumTrace corollary1_sum(const Sieve& sieve, double t, const TruncationSpec& spec) {
  spec.validate();
  const std::uint64_t x = spec.term_limit;
  require_sieve(sieve, x, "corollary1_sum");

  std::vector<std::uint64_t> cutoffs;
  for (std::uint64_t decade = 10; decade <= x; decade *= 10) {
    for (const std::uint64_t step : {1, 2, 5}) {
      if (decade * step < x) cutoffs.push_back(decade * step);
    }
  }
  cutoffs.push_back(x);

  CosineSumTrace out{0.0, {}};
  PairwiseAccumulator<double> acc;
  auto next = cutoffs.begin();
  for (const auto p : sieve.primes()) {
    if (p > x) break;
    while (next != cutoffs.end() && *next < p) out.trace.push_back({*next++, acc.value()});
    const double ln = std::log(static_cast<double>(p));
    acc.add(std::cos(t * ln) / std::sqrt(static_cast<double>(p)));
  }
  while (next != cutoffs.end()) out.trace.push_back({*next++, acc.value()});
  out.value = acc.value();
  return out;
}

SeriesTriplet corollary2_triplet(const Sieve& sieve, ComplexPoint s, std::uint64_t cutoff) {
  if (cutoff == 0) throw DomainError("corollary2_triplet: cutoff must be >= 1");
  require_sieve(sieve, cutoff, "corollary2_triplet");
  PairwiseAccumulator<std::complex<double>> omega;
  PairwiseAccumulator<std::complex<double>> zeta;
  PairwiseAccumulator<std::complex<double>> lambda;
  for (std::uint64_t n = 1; n <= cutoff; ++n) {
    const auto term = inverse_power(n, s.sigma, s.t);
    zeta.add(term);
    if (sieve.is_prime(n)) {
      omega.add(term);
    } else {
      lambda.add(term);
    }
  }
  return {omega.value(), zeta.value(), lambda.value(), cutoff};
}

BaselCheck basel_partial(std::uint64_t n_terms) {
  if (n_terms == 0) throw DomainError("basel_partial: n_terms must be >= 1");
  PairwiseAccumulator<double> partial;
  PairwiseAccumulator<double> rhs;
  for (std::uint64_t k = 1; k <= n_terms; ++k) {
    const double kd = static_cast<double>(k);
    partial.add(1.0 / (kd * kd));
    const double root = kd * std::numbers::pi;
    rhs.add(1.0 / (root * root));
  }
  return {n_terms, partial.value(), 1.0 / 6.0, rhs.value()};
}

double sin_product_partial(double x, std::uint64_t k_factors) {
  if (k_factors == 0) throw DomainError("sin_product_partial: need at least one factor");
  const double x2 = x * x;
  double product = 1.0;
  for (std::uint64_t k = 1; k <= k_factors; ++k) {
    const double root = static_cast<double>(k) * std::numbers::pi;
    product *= 1.0 - x2 / (root * root);
  }
  return product;
}

}  // namespace primetab
