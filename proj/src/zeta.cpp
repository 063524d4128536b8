#include "primetab/zeta.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primetab/error.hpp"
#include "primetab/summation.hpp"

namespace primetab {

namespace {

using cplx = std::complex<double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_2, B_4, ..., B_14.
constexpr std::array<double, 7> kBernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};

cplx inverse_power(double n, cplx s) {
  const double ln = std::log(n);
  return std::polar(std::exp(-s.real() * ln), -s.imag() * ln);
}

void check_pole(ComplexPoint s) {
  if (s.sigma == 1.0 && s.t == 0.0) throw SingularityError("zeta: pole at s = 1");
}

// log Gamma(z) for Re z > 0, continuous in z.
cplx log_gamma(cplx z) {
  cplx shift{0.0, 0.0};
  while (z.real() < 10.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series{0.0, 0.0};
  cplx power = inv;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    const double two_k = 2.0 * static_cast<double>(k);
    series += kBernoulli[k - 1] / (two_k * (two_k - 1.0)) * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series - shift;
}

}  // namespace

const char* to_string(ZetaMethod method) noexcept {
  return method == ZetaMethod::eta_accelerated ? "eta-accelerated" : "euler-maclaurin";
}

std::uint32_t default_eta_terms(double t) {
  const auto scaled = static_cast<std::uint32_t>(std::ceil(3.0 * std::abs(t))) + 32;
  return scaled < 64 ? 64 : scaled;
}

EvalResult zeta_eta(ComplexPoint s, std::uint32_t n_terms) {
  check_pole(s);
  if (!(s.sigma > 0.0)) throw DomainError("zeta_eta: requires sigma > 0");
  if (n_terms < 16) throw std::invalid_argument("zeta_eta: n_terms must be >= 16");

  const cplx sv = s.value();
  const cplx denom = 1.0 - std::exp((1.0 - sv) * std::numbers::ln2);
  if (std::abs(denom) < 1e-14) {
    throw SingularityError("zeta_eta: 1 - 2^(1-s) vanishes at this point");
  }

  // Weights w_i proportional to n (n+i-1)! 4^i / ((n-i)! (2i)!), built downward
  // from w_n = 1 so nothing overflows. 1 - d_k/d_n is the normalised suffix sum.
  const std::uint32_t n = n_terms;
  std::vector<double> w(n + 1);
  w[n] = 1.0;
  for (std::uint32_t i = n; i-- > 0;) {
    const double id = i;
    const double nd = n;
    w[i] = w[i + 1] * ((2.0 * id + 1.0) * (2.0 * id + 2.0)) / (4.0 * (nd + id) * (nd - id));
  }
  std::vector<double> suffix(n + 1, 0.0);
  for (std::uint32_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + w[i + 1];
  const double total = suffix[0] + w[0];

  PairwiseAccumulator<cplx> acc;
  PairwiseAccumulator<double> magnitude;
  for (std::uint32_t k = 0; k < n; ++k) {
    const double weight = suffix[k] / total;
    const cplx term = (k % 2 == 0 ? weight : -weight) * inverse_power(k + 1.0, sv);
    acc.add(term);
    magnitude.add(std::abs(term));
  }
  const cplx value = acc.value() / denom;

  const double at = std::abs(s.t);
  const double truncation = 3.0 * std::exp(-static_cast<double>(n) * std::log(3.0 + std::sqrt(8.0))) *
                            (1.0 + 2.0 * at) * std::exp(std::numbers::pi * at / 2.0) /
                            std::abs(denom);
  const double rounding =
      kEps * (8.0 + at * std::log(static_cast<double>(n) + 1.0)) * magnitude.value() / std::abs(denom);
  return {s, value, ZetaMethod::eta_accelerated, truncation + rounding};
}

EvalResult zeta_eta(ComplexPoint s) { return zeta_eta(s, default_eta_terms(s.t)); }

EvalResult zeta_em(ComplexPoint s, std::uint32_t cutoff, std::uint32_t bernoulli_order) {
  check_pole(s);
  if (bernoulli_order < 2 || bernoulli_order > 12 || bernoulli_order % 2 != 0) {
    throw std::invalid_argument("zeta_em: bernoulli_order must be even and in [2, 12]");
  }
  if (!(static_cast<double>(cutoff) > std::abs(s.t) / 2.0 + 10.0)) {
    throw AccuracyError("zeta_em: cutoff " + std::to_string(cutoff) +
                        " too small for |t| = " + std::to_string(std::abs(s.t)));
  }
  const cplx sv = s.value();
  const double nd = cutoff;

  PairwiseAccumulator<cplx> head;
  PairwiseAccumulator<double> magnitude;
  for (std::uint32_t k = 1; k < cutoff; ++k) {
    const cplx term = inverse_power(k, sv);
    head.add(term);
    magnitude.add(std::abs(term));
  }
  const cplx n_pow = inverse_power(nd, sv);  // N^-s
  cplx value = head.value() + nd * n_pow / (sv - 1.0) + 0.5 * n_pow;

  // Correction j: B_2j / (2j)! * s (s+1) ... (s+2j-2) * N^{-s-2j+1}.
  const std::uint32_t corrections = bernoulli_order / 2;
  cplx rising = sv;          // s (s+1) ... (s+2j-2)
  cplx n_factor = n_pow / nd;  // N^{-s-2j+1}
  double factorial = 2.0;    // (2j)!
  cplx next_term{0.0, 0.0};
  for (std::uint32_t j = 1; j <= corrections + 1; ++j) {
    const cplx term = kBernoulli[j - 1] / factorial * rising * n_factor;
    if (j <= corrections) {
      value += term;
    } else {
      next_term = term;
    }
    const double two_j = 2.0 * j;
    rising *= (sv + two_j - 1.0) * (sv + two_j);
    n_factor /= nd * nd;
    factorial *= (two_j + 1.0) * (two_j + 2.0);
  }

  const double m2 = 2.0 * corrections + 1.0;
  const double truncation = std::abs(sv + m2) / (s.sigma + m2) * std::abs(next_term);
  const double rounding =
      kEps * (8.0 + std::abs(s.t) * std::log(nd)) * (magnitude.value() + std::abs(value));
  return {s, value, ZetaMethod::euler_maclaurin, truncation + rounding};
}

EvalResult zeta_em(ComplexPoint s) {
  const auto cutoff = static_cast<std::uint32_t>(std::ceil(2.0 * std::abs(s.t))) + 30;
  return zeta_em(s, cutoff, 12);
}

double riemann_siegel_theta(double t) {
  const cplx z{0.25, 0.5 * t};
  return log_gamma(z).imag() - 0.5 * t * std::log(std::numbers::pi);
}

double riemann_siegel_theta_asymptotic(double t) {
  return 0.5 * t * std::log(t / (2.0 * std::numbers::pi)) - 0.5 * t - std::numbers::pi / 8.0 +
         1.0 / (48.0 * t);
}

double hardy_z(double t) {
  const auto zeta = zeta_eta({0.5, t});
  return (std::polar(1.0, riemann_siegel_theta(t)) * zeta.value).real();
}

ZeroScan locate_zeros(double t_max, double scan_step, double tol) {
  if (!(scan_step > 0.0 && scan_step <= 0.5)) {
    throw std::invalid_argument("locate_zeros: scan_step must lie in (0, 0.5]");
  }
  if (!(tol >= 1e-12)) throw std::invalid_argument("locate_zeros: tol must be >= 1e-12");
  if (!(t_max > 0.0)) throw std::invalid_argument("locate_zeros: t_max must be positive");

  ZeroScan out;
  const auto steps = static_cast<std::uint64_t>(std::ceil(t_max / scan_step));
  double prev_t = 0.0;
  double prev_z = hardy_z(prev_t);
  for (std::uint64_t i = 1; i <= steps; ++i) {
    const double t = std::min(t_max, static_cast<double>(i) * scan_step);
    const double z = hardy_z(t);
    if ((prev_z < 0.0) != (z < 0.0)) {
      double lo = prev_t;
      double hi = t;
      double z_lo = prev_z;
      double z_hi = z;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double z_mid = hardy_z(mid);
        if ((z_mid < 0.0) == (z_lo < 0.0)) {
          lo = mid;
          z_lo = z_mid;
        } else {
          hi = mid;
          z_hi = z_mid;
        }
      }
      // Secant polish on the final bracket, kept inside it.
      double a = lo, fa = z_lo, b = hi, fb = z_hi;
      double best = 0.5 * (lo + hi);
      for (int step = 0; step < 3 && fb != fa; ++step) {
        const double c = b - fb * (b - a) / (fb - fa);
        if (!(c > lo && c < hi)) break;
        best = c;
        a = b;
        fa = fb;
        b = c;
        fb = hardy_z(c);
        if (fb == 0.0) break;
      }
      out.zeros.push_back({prev_t, t, best, std::abs(zeta_eta({0.5, best}).value)});
    }
    prev_t = t;
    prev_z = z;
  }

  out.expected_count = riemann_siegel_theta(t_max) / std::numbers::pi + 1.0;
  const double found = static_cast<double>(out.zeros.size());
  if (std::abs(found - out.expected_count) >= 1.5) {
    out.warning = "found " + std::to_string(out.zeros.size()) + " zeros below t=" +
                  std::to_string(t_max) + " but theta(T)/pi + 1 = " +
                  std::to_string(out.expected_count) + "; scan_step may merge neighbouring zeros";
  }
  return out;
}

}  // namespace primetab
