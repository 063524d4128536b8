#pragma once

// Riemann zeta off the real axis by two independent methods, the
// Riemann-Siegel theta function, Hardy's Z, and zero location on the
// critical line.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "primetab/series.hpp"

namespace primetab {

enum class ZetaMethod { eta_accelerated, euler_maclaurin };

const char* to_string(ZetaMethod method) noexcept;

struct EvalResult {
  ComplexPoint s;
  std::complex<double> value;
  ZetaMethod method;
  double est_error;  // truncation bound plus a rounding estimate; always > 0
};

struct ZeroBracket {
  double t_lo;
  double t_hi;
  double refined_t;
  double residual;  // |zeta(1/2 + i refined_t)|
};

struct ZeroScan {
  std::vector<ZeroBracket> zeros;
  double expected_count;  // theta(T)/pi + 1
  std::string warning;    // empty when the count is plausible
};

/// Alternating (eta) series with Borwein's binomial weights, divided by
/// 1 - 2^{1-s}. Requires sigma > 0, s != 1 and n_terms >= 16.
EvalResult zeta_eta(ComplexPoint s, std::uint32_t n_terms);

/// max(64, ceil(3|t|) + 32).
std::uint32_t default_eta_terms(double t);

EvalResult zeta_eta(ComplexPoint s);

/// Euler-Maclaurin with Bernoulli corrections B_2 ... B_{bernoulli_order}.
/// Requires cutoff > |t|/2 + 10 and an even order in [2, 12].
EvalResult zeta_em(ComplexPoint s, std::uint32_t cutoff, std::uint32_t bernoulli_order);

/// cutoff 2|t| + 30, order 12.
EvalResult zeta_em(ComplexPoint s);

/// theta(t) = Im log Gamma(1/4 + i t/2) - (t/2) log pi, from a shifted Stirling series.
double riemann_siegel_theta(double t);

/// t/2 log(t / 2 pi) - t/2 - pi/8 + 1/(48 t). Only meaningful for t well above 1.
double riemann_siegel_theta_asymptotic(double t);

/// Z(t) = exp(i theta(t)) zeta(1/2 + i t), real for real t.
double hardy_z(double t);

/// Sign changes of Z on a grid of step scan_step over [0, t_max], each refined by
/// bisection to tol and polished with three secant steps.
ZeroScan locate_zeros(double t_max, double scan_step = 0.1, double tol = 1e-12);

}  // namespace primetab
