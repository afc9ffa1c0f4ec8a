#include "fjb/dirichlet.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "fjb/quadrature.hpp"
#include "fjb/specfun.hpp"

namespace fjb::dirichlet {

namespace {

using cd = std::complex<double>;
using specfun::kPi;

quad::Options qopts(const EvalOptions& o) {
  quad::Options q;
  q.abs_tol = o.abs_tol;
  q.max_depth = o.max_subdivisions;
  return q;
}

void require_finite(double t, const char* who) {
  if (!std::isfinite(t)) throw std::domain_error(std::string(who) + ": non-finite argument");
}

// Panel width that keeps at most one sign change of the oscillating factor
// per panel.
double half_period(double freq) { return kPi / std::max(std::abs(freq), 1.0); }

}  // namespace

double dirichlet_kernel(double x, int n) {
  const double s = std::sin(0.5 * x);
  if (s == 0.0) return 2.0 * n + 1.0;
  return std::sin((n + 0.5) * x) / s;
}

double ssi(const KernelArgs& args, const EvalOptions& opts) {
  opts.validate();
  require_finite(args.x, "ssi");
  require_finite(args.lambda, "ssi");
  if (!(args.x > 0.0 && args.x < kPi)) throw std::domain_error("ssi: x must lie in (0, pi)");
  const double lam = args.lambda;
  auto f = [lam](double t) { return t == 0.0 ? lam : std::sin(lam * t) / std::sin(t); };
  return quad::integrate_oscillatory(f, 0.0, args.x, half_period(lam), qopts(opts)).value;
}

ComplexValue eci(const KernelArgs& args, const EvalOptions& opts) {
  opts.validate();
  require_finite(args.x, "eci");
  require_finite(args.lambda, "eci");
  if (!(args.x > 0.0 && args.x < 0.5 * kPi))
    throw std::domain_error("eci: x must lie in (0, pi/2)");
  const double lam = args.lambda;
  auto f = [lam](double t) {
    return cd(std::cos(lam * t), std::sin(lam * t)) / std::cos(t);
  };
  return from_complex(
      quad::integrate_oscillatory(f, 0.0, args.x, half_period(lam), qopts(opts)).value);
}

ComplexValue eci_laplace(const KernelArgs& args, const EvalOptions& opts) {
  opts.validate();
  require_finite(args.x, "eci_laplace");
  require_finite(args.lambda, "eci_laplace");
  if (!(args.x > 0.0 && args.x < 0.5 * kPi))
    throw std::domain_error("eci_laplace: x must lie in (0, pi/2)");
  if (!(args.lambda > -1.0)) throw std::domain_error("eci_laplace: lambda must be > -1");
  const double lam = args.lambda;
  const cd phase = std::polar(1.0, (lam + 1.0) * args.x);  // e^{i(λ+1)x}
  const cd e2ix = std::polar(1.0, 2.0 * args.x);
  auto f = [lam, phase, e2ix](double u) {
    const double w = std::exp(-2.0 * u);
    return 2.0 * std::exp(-(lam + 1.0) * u) *
           (1.0 / (1.0 + w) - phase / (1.0 + w * e2ix));
  };
  const cd I =
      quad::integrate_semi_infinite(f, lam + 1.0, opts.truncation_floor, qopts(opts)).value;
  return from_complex(cd(0.0, 1.0) * I);
}

double sci(const KernelArgs& args, const EvalOptions& opts) { return eci(args, opts).im; }

double cci(const KernelArgs& args, const EvalOptions& opts) { return eci(args, opts).re; }

double series_remainder_via_kernel(double x, double mu, const EvalOptions& opts) {
  opts.validate();
  require_finite(x, "series_remainder_via_kernel");
  require_finite(mu, "series_remainder_via_kernel");
  if (!(x > 0.0 && x < kPi))
    throw std::domain_error("series_remainder_via_kernel: x must lie in (0, pi)");
  if (!(mu > -1.0)) throw std::domain_error("series_remainder_via_kernel: mu must be > -1");
  const double freq = mu + 0.5;
  auto f = [freq](double y) {
    return y == 0.0 ? freq : std::sin(freq * y) / (2.0 * std::sin(0.5 * y));
  };
  const double I = quad::integrate_oscillatory(f, 0.0, x, half_period(freq), qopts(opts)).value;
  return 0.5 * kPi - I;
}

double cos_kernel_integral(double lo, double hi, double mu, const EvalOptions& opts) {
  opts.validate();
  require_finite(lo, "cos_kernel_integral");
  require_finite(hi, "cos_kernel_integral");
  require_finite(mu, "cos_kernel_integral");
  if (!(lo > 0.0 && lo <= hi && hi <= kPi))
    throw std::domain_error("cos_kernel_integral: require 0 < lo <= hi <= pi");
  const double freq = mu + 0.5;
  auto f = [freq](double y) { return std::cos(freq * y) / (2.0 * std::sin(0.5 * y)); };
  return quad::integrate_oscillatory(f, lo, hi, half_period(freq), qopts(opts)).value;
}

}  // namespace fjb::dirichlet
