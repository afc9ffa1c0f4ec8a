#pragma once

#include "fjb/types.hpp"

// Sine/cosine integrals, the rotated exponential integral E(t) = ∫_0^∞
// e^{-tu}/(u-i) du, the comparison function M(t) = ∫_0^∞ e^{-tu}/√(u²+1) du,
// and the digamma / log-gamma / arccot helpers the envelope bounds need.

namespace fjb::specfun {

// Compile-time constants, full double precision.
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;
inline constexpr double kSqrt2 = 1.41421356237309504880168872420969808;

// C1 = ln 2 − γ: constant term of M(t) + ln t as t → 0+.
inline constexpr double kC1 = kLn2 - kEulerGamma;
// C2 = ln(1 + √2): additive constant of the logarithmic envelope.
inline constexpr double kC2 = 0.88137358701954302523260932497979230;
// C3 = √((π/2)² + 1): additive constant of the log-form Taylor tail bound.
inline const double kC3 = std::sqrt(1.0 + 0.25 * kPi * kPi);

// Si(t) = ∫_0^t sin(u)/u du for t ≥ 0.  Power series up to t = 4, inversion
// through E(t) beyond.
double sine_integral(double t, const EvalOptions& opts = {});

// si(t) = Si(t) − π/2.
double si(double t, const EvalOptions& opts = {});

// Ci(t) for t > 0; same two-regime strategy as Si.
double cosine_integral(double t, const EvalOptions& opts = {});

// Cin(t) = log t − Ci(t) + γ = ∫_0^t (1 − cos u)/u du, t ≥ 0.
double cin(double t, const EvalOptions& opts = {});

// E(t) = ∫_0^∞ e^{-tu}/(u − i) du = g(t) + i f(t), t > 0.
ComplexValue exp_integral_E(double t, const EvalOptions& opts = {});

// M(t) = ∫_0^∞ e^{-tu}/√(u²+1) du, t > 0.
double comparison_M(double t, const EvalOptions& opts = {});

// g/f pair of E(t) with its argument, kept together because the pair shows up
// as a unit in the threshold and envelope computations.
struct AuxExpIntegral {
  double g = 0.0;
  double f = 0.0;
  double t = 0.0;
};

AuxExpIntegral aux_exp_integral(double t, const EvalOptions& opts = {});

// ψ(x) for x off the non-positive integers: recurrence shift into x ≥ 10,
// then Stirling-type asymptotic series.
double digamma(double x);

// ln Γ(x) for x > 0, same shift-plus-Stirling scheme.
double log_gamma(double x);

// arccot on [0, ∞): arccot 0 = π/2, decreasing to 0.  Negative arguments are
// rejected; every use site has a nonnegative argument.
double arccot(double t);

}  // namespace fjb::specfun
