#pragma once

#include <optional>
#include <string_view>

#include "fjb/types.hpp"

// Every envelope and comparison bound as a named pure function: the
// arccot / M / log / secant envelopes of the trigonometric sums, the classical
// sine-polynomial bounds, and the unit-disk bounds for the Taylor remainder of
// the logarithm.

namespace fjb::bounds {

enum class BoundId {
  ArccotEnvelope,
  MEnvelope,
  LogEnvelope,
  FracEnvelope,
  SecEnvelope,
  EbycosRhs,
  FJTuran,
  Fejer1928,
  Turan1952,
  AK2003,
  BK1998,
  Koumandos2012,
  AlKou12,
  AKEvenUpper,
  TaylorSimple,
  TaylorMp,
  TaylorLog1z,
  TaylorMhat,
};

const char* to_string(BoundId id);
std::optional<BoundId> bound_from_string(std::string_view name);

// Optimal even-n upper-bound slope for the sine partial sums: the supremum of
// S_n(x)/(pi - x) over even n >= 2, attained at n = 2, x = 1.338586731...
inline constexpr double kAlphaEven = 0.66395348941819662;

// arccot((2μ+1) sin(x/2)): two-sided envelope around the sawtooth for the
// imaginary part of the rotated sum.  μ ≥ −1/2, 0 ≤ x ≤ π.
double arccot_envelope(double mu, double x);

// M((2μ+1) sin(x/2)) majorizes |L(x,μ)| for μ > −1/2, 0 < x < π.
double m_envelope(double mu, double x, const EvalOptions& opts = {});

// M(λ sin x) majorizes |𝕃(x,λ)| for λ > 0, 0 < x < π.
double m_envelope_odd(double lambda, double x, const EvalOptions& opts = {});

// −ln((2μ+1) sin(x/2)) + C₂, valid while the argument is below 1.
double log_envelope(double mu, double x);

// 1/((2μ+1) sin(x/2)): the coarser practical form of the M envelope.
double frac_envelope(double mu, double x);

// 1/(|λ| cos x): envelope for |Eci(x,λ) − i/λ| on 0 < x < π/2.
double sec_envelope(double lambda, double x);

// 1/λ − M(λ) + M(λ cos x): the sharper envelope for the same quantity, λ > 0.
double ebycos_rhs(double lambda, double x, const EvalOptions& opts = {});

// All classical bounds for the sine partial sum Σ_{k≤n} sin kx / k at (n, x).
// Values are returned unconditionally; validity windows (e.g. n ≥ 2 for the
// Turán-type lower bounds, the conservative interior window for bk1998, even n
// for ak_even_upper) are enforced by the sweep layer.
struct ClassicalBounds {
  double fj_turan = 0.0;       // (π−x)/2
  double fejer1928 = 0.0;      // sin x/3 + sin nx/(2n)
  double turan1952 = 0.0;      // 4 sin²(x/2) (cot(x/2) − (π−x)/2)
  double ak2003 = 0.0;         // x² (cot(x/2) − (π−x)/2)
  double bk1998 = 0.0;         // (1 − sin(x/2))/cos(x/2)
  double koumandos2012 = 0.0;  // x (1 − x/π)³
  double alkou12 = 0.0;        // (π/4) δₙ cot(x/2) (1 − Pₙ(cos x))
  double ak_even_upper = 0.0;  // 0.66395 (π−x)
};

ClassicalBounds classical_bounds(long n, double x);

// Legendre polynomial Pₙ(t) by the three-term recurrence.
double legendre_p(int n, double t);

// δₙ = ((m+1)/(m+3/2)) (m!/Γ(m+3/2))², m = ⌊(n−1)/2⌋, via log-gamma
// differences so large n cannot overflow.
double alkou_delta(long n);

// Conservative interior window on which the bk1998 lower bound is asserted.
double bk1998_window_lo(long n);
double bk1998_window_hi(long n);

// Point in the closed unit disk with a truncation order, for the remainder
// R_n(z) = Σ_{k>n} z^k/k of the Taylor expansion of −log(1−z).
struct TaylorPoint {
  double z_re = 0.0;
  double z_im = 0.0;
  long n = 1;
};

// The unit-disk remainder bounds; absent optional = point outside that bound's
// stated domain.  With r = |z|, q = (n+1/2)|1−z|, p = (n+1)(1−r):
//   simple = r^{n+1}/q                        (|z| ≤ 1, z ≠ 1)
//   mp     = 1/(e·p) if p ≥ 1/e else −ln p    (|z| < 1)
//   log1z  = r^{n+1} (−ln q + C₃)             (|z| < 1 and q < 1)
//   mhat   = r^{n+1} · min(1/q, −ln q + C₃),  log term only while q < 1
struct TaylorBounds {
  std::optional<double> simple;
  std::optional<double> mp;
  std::optional<double> log1z;
  std::optional<double> mhat;
};

TaylorBounds taylor_bounds(const TaylorPoint& pt);

// Oracle-grade evaluation of R_n(z): direct compensated summation away from
// the unit circle, closed form −log(1−z) − Σ_{k≤n} z^k/k in extended
// precision near and on it.
ComplexValue taylor_remainder(const TaylorPoint& pt);

}  // namespace fjb::bounds
