#include "fjb/specfun.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fjb/quadrature.hpp"

namespace fjb::specfun {

namespace {

using cd = std::complex<double>;

quad::Options qopts(const EvalOptions& o) {
  quad::Options q;
  q.abs_tol = o.abs_tol;
  q.max_depth = o.max_subdivisions;
  return q;
}

void require_finite(double t, const char* who) {
  if (!std::isfinite(t)) throw std::domain_error(std::string(who) + ": non-finite argument");
}

// Si(t) = Σ_{k≥0} (−1)^k t^{2k+1} / ((2k+1)(2k+1)!), good through t ≈ 4.
double si_series(double t) {
  const double t2 = t * t;
  double term = t;
  double sum = t;
  for (int k = 1; k < 64; ++k) {
    term *= -t2 * (2.0 * k - 1.0) / ((2.0 * k + 1.0) * (2.0 * k + 1.0) * (2.0 * k));
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

// Cin(t) = Σ_{k≥1} (−1)^{k−1} t^{2k} / ((2k)(2k)!).
double cin_series(double t) {
  const double t2 = t * t;
  double term = 0.25 * t2;  // k = 1
  double sum = term;
  for (int k = 2; k < 64; ++k) {
    term *= -t2 * (2.0 * k - 2.0) / ((2.0 * k) * (2.0 * k) * (2.0 * k - 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

cd e_impl(double t, const EvalOptions& o) {
  // 1/(u − i) = (u + i)/(u² + 1); decay rate of the integrand is t.
  auto r = quad::integrate_semi_infinite(
      [t](double u) { return std::exp(-t * u) * cd(u, 1.0) / (u * u + 1.0); }, t,
      o.truncation_floor, qopts(o));
  return r.value;
}

}  // namespace

double sine_integral(double t, const EvalOptions& opts) {
  opts.validate();
  require_finite(t, "sine_integral");
  if (t < 0.0) throw std::domain_error("sine_integral: t must be >= 0");
  if (t <= 4.0) return si_series(t);
  return si(t, opts) + 0.5 * kPi;
}

double si(double t, const EvalOptions& opts) {
  opts.validate();
  require_finite(t, "si");
  if (t < 0.0) throw std::domain_error("si: t must be >= 0");
  if (t <= 4.0) return si_series(t) - 0.5 * kPi;
  // Invert g = −cos·Ci − sin·si, f = sin·Ci − cos·si.
  cd E = e_impl(t, opts);
  return -E.real() * std::sin(t) - E.imag() * std::cos(t);
}

double cosine_integral(double t, const EvalOptions& opts) {
  opts.validate();
  require_finite(t, "cosine_integral");
  if (!(t > 0.0)) throw std::domain_error("cosine_integral: t must be > 0");
  if (t <= 4.0) return std::log(t) + kEulerGamma - cin_series(t);
  cd E = e_impl(t, opts);
  return -E.real() * std::cos(t) + E.imag() * std::sin(t);
}

double cin(double t, const EvalOptions& opts) {
  opts.validate();
  require_finite(t, "cin");
  if (t < 0.0) throw std::domain_error("cin: t must be >= 0");
  if (t <= 4.0) return cin_series(t);
  return std::log(t) + kEulerGamma - cosine_integral(t, opts);
}

ComplexValue exp_integral_E(double t, const EvalOptions& opts) {
  opts.validate();
  require_finite(t, "exp_integral_E");
  if (!(t > 0.0)) throw std::domain_error("exp_integral_E: t must be > 0");
  return from_complex(e_impl(t, opts));
}

double comparison_M(double t, const EvalOptions& opts) {
  opts.validate();
  require_finite(t, "comparison_M");
  if (!(t > 0.0)) throw std::domain_error("comparison_M: t must be > 0");
  auto r = quad::integrate_semi_infinite(
      [t](double u) { return std::exp(-t * u) / std::sqrt(u * u + 1.0); }, t,
      opts.truncation_floor, qopts(opts));
  return r.value;
}

AuxExpIntegral aux_exp_integral(double t, const EvalOptions& opts) {
  ComplexValue e = exp_integral_E(t, opts);
  return {e.re, e.im, t};
}

double digamma(double x) {
  if (!std::isfinite(x)) throw std::domain_error("digamma: non-finite argument");
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("digamma: pole at non-positive integer");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  // ψ(x) ~ ln x − 1/(2x) − Σ B_{2n}/(2n x^{2n})
  static constexpr double c[7] = {-1.0 / 12.0,  1.0 / 120.0,     -1.0 / 252.0, 1.0 / 240.0,
                                  -1.0 / 132.0, 691.0 / 32760.0, -1.0 / 12.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double s = std::log(x) - 0.5 * inv;
  double p = inv2;
  for (double ci : c) {
    s += ci * p;
    p *= inv2;
  }
  return s + shift;
}

double log_gamma(double x) {
  if (!std::isfinite(x) || !(x > 0.0))
    throw std::domain_error("log_gamma: argument must be finite and > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= std::log(x);
    x += 1.0;
  }
  // Stirling: (x−1/2)ln x − x + ln(2π)/2 + Σ B_{2n}/(2n(2n−1) x^{2n−1})
  static constexpr double kHalfLn2Pi = 0.91893853320467274178032973640561764;
  static constexpr double c[7] = {1.0 / 12.0,  -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
                                  1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double s = (x - 0.5) * std::log(x) - x + kHalfLn2Pi;
  double p = inv;
  for (double ci : c) {
    s += ci * p;
    p *= inv2;
  }
  return s + shift;
}

double arccot(double t) {
  if (!std::isfinite(t)) throw std::domain_error("arccot: non-finite argument");
  if (t < 0.0) throw std::domain_error("arccot: negative argument");
  if (t == 0.0) return 0.5 * kPi;
  return std::atan(1.0 / t);
}

}  // namespace fjb::specfun
