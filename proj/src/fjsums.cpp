#include "fjb/fjsums.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include "fjb/quadrature.hpp"
#include "fjb/specfun.hpp"

namespace fjb::fjsums {

namespace {

using cd = std::complex<double>;
using specfun::kPi;

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// |sin(x/2)| below which the plain Laplace integrand gets too spiky and the
// summation / pole-subtracted routes take over.
constexpr double kSmallS = 0.01;

quad::Options qopts(const EvalOptions& o) {
  quad::Options q;
  q.abs_tol = o.abs_tol;
  q.max_depth = o.max_subdivisions;
  return q;
}

void require_finite(double t, const char* who) {
  if (!std::isfinite(t)) throw std::domain_error(std::string(who) + ": non-finite argument");
}

void require_mu(double mu, const char* who) {
  require_finite(mu, who);
  if (!(mu > -1.0)) throw std::domain_error(std::string(who) + ": mu must be > -1");
}

// Reduce an angle into [0, 2π); rejects the lattice points where the series
// diverges.
double reduce_angle(double x, const char* who) {
  require_finite(x, who);
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r == 0.0 || r == kTwoPi)
    throw std::domain_error(std::string(who) + ": x must not be a multiple of 2*pi");
  return r;
}

// e^{ikx} with the product k·x formed in extended precision so the phase stays
// accurate deep into long summations.
cd unit_phase(long k, double x) {
  constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;
  const long double r = std::fmod(static_cast<long double>(k) * static_cast<long double>(x), kTwoPiL);
  return std::polar(1.0, static_cast<double>(r));
}

// g(z) = 1/(e^z − 1) − e^{-z}/z: the kernel with its simple pole removed,
// analytic for |Im z| < 2π.  Power series near 0, stabilized product form
// elsewhere (safe as Re z → +∞: both factors decay).
cd pole_subtracted_kernel(const cd& z) {
  if (std::abs(z) < 0.1) {
    static constexpr double c[9] = {1.0 / 2.0,      -5.0 / 12.0,       1.0 / 6.0,
                                    -31.0 / 720.0,  1.0 / 120.0,       -41.0 / 30240.0,
                                    1.0 / 5040.0,   -31.0 / 1209600.0, 1.0 / 362880.0};
    cd p = 1.0, s = 0.0;
    for (double cm : c) {
      s += cm * p;
      p *= z;
    }
    return s;
  }
  const cd em = std::exp(-z);
  return em * (1.0 / (1.0 - em) - 1.0 / z);
}

// Plain Laplace route, usable while sin(x/2) is not small: the integrand is
// written so every exponential has a nonpositive real exponent.
cd l_quad(double x, double mu, const EvalOptions& o) {
  const cd eix = std::polar(1.0, x);
  auto f = [mu, eix](double u) {
    const cd w = std::exp(-u) * eix;
    return std::exp(-(mu + 1.0) * u) * eix / (1.0 - w);
  };
  return quad::integrate_semi_infinite(f, mu + 1.0, o.truncation_floor, qopts(o)).value;
}

// Small-angle route: split off the pole of the kernel at u = ix analytically,
//   L(x,μ) = e^{ix} E((μ+1)x) + ∫_0^∞ e^{-μu} g(u − ix) du,
// leaving a smooth integrand the adaptive rule handles cheaply.
cd l_small_x_quad(double x, double mu, const EvalOptions& o) {
  const cd E = to_complex(specfun::exp_integral_E((mu + 1.0) * x, o));
  const cd eix = std::polar(1.0, x);
  auto f = [mu, x, eix](double u) -> cd {
    const cd z(u, -x);
    if (std::abs(z) < 0.1) return std::exp(-mu * u) * pole_subtracted_kernel(z);
    const cd em = std::exp(-u) * eix;  // e^{-z}
    return std::exp(-(mu + 1.0) * u) * eix * (1.0 / (1.0 - em) - 1.0 / z);
  };
  const cd tail =
      quad::integrate_semi_infinite(f, mu + 1.0, o.truncation_floor, qopts(o)).value;
  return eix * E + tail;
}

// Plan for the summation route: d rounds of summation by parts, then N kept
// terms.  Error model: roundoff amplified by |q/(q−1)|^d = (2 sin(x/2))^{-d},
// plus the Dirichlet-test tail bound B^d · Δ^d b_{N+1} / sin(x/2).
struct SeriesPlan {
  int d = 0;
  long n = 0;
  double predicted = std::numeric_limits<double>::infinity();
};

SeriesPlan plan_series(double s, double mu, double tol) {
  constexpr long kCap = 4000000;
  const double lnB = std::log(0.5 / s);
  const double lns = std::log(s);
  SeriesPlan best;
  double best_cost = std::numeric_limits<double>::infinity();
  double lfac = 0.0;  // ln d!
  for (int d = 1; d <= 12; ++d) {
    lfac += std::log(static_cast<double>(d));
    if (static_cast<double>(d) * std::max(lnB, 0.0) > 650.0) break;
    const double cancel =
        8.0 * std::exp(d * std::max(lnB, 0.0)) * kEps * std::max(1.0, 1.0 / (1.0 + mu));
    // Smallest N with tail ≤ tol/2, using Δ^d b_{N+1} ≤ d!/(N+1+μ)^{d+1}.
    const double lhs = d * lnB - lns + lfac - std::log(0.5 * tol);
    double want = std::exp(lhs / (d + 1)) - 1.0 - mu;
    long n = want > static_cast<double>(kCap) ? kCap
                                              : std::max(8L, static_cast<long>(std::ceil(want)));
    const double tail =
        std::exp(d * lnB - lns + lfac - (d + 1) * std::log(static_cast<double>(n) + 1.0 + mu));
    const double predicted = cancel + tail;
    const double cost = static_cast<double>(n) + 30.0 * d;
    const bool ok = predicted <= tol;
    const bool best_ok = best.predicted <= tol;
    if ((ok && (!best_ok || cost < best_cost)) ||
        (!ok && !best_ok && predicted < best.predicted)) {
      best = {d, n, predicted};
      best_cost = cost;
    }
  }
  return best;
}

// Run the planned summation: Σ q^k/(k+μ) = Σ_{j=1}^d −Q^j Δ^{j-1}b_1
// + Q^d Σ_{k=1}^N q^k Δ^d b_k + tail, with Q = q/(q−1) and b_k = 1/(k+μ).
cd series_eval(double x, double mu, const SeriesPlan& plan, double* err_out) {
  const int d = plan.d;
  const cd q = std::polar(1.0, x);
  const cd Q = q / (q - 1.0);
  cd acc = 0.0;
  cd Qp = 1.0;
  double A = 1.0 / (1.0 + mu);  // Δ^{j-1} b_1, starting at j = 1
  for (int j = 1; j <= d; ++j) {
    Qp *= Q;
    acc -= Qp * A;
    A *= static_cast<double>(j) / (1.0 + mu + j);
  }
  // Now A = Δ^d b_1 and Qp = Q^d.
  double c = A;
  quad::detail::Kahan<double> sre, sim;
  cd qk = q;
  for (long k = 1; k <= plan.n; ++k) {
    if ((k & 4095L) == 0L) qk = unit_phase(k, x);
    sre.add(qk.real() * c);
    sim.add(qk.imag() * c);
    c *= (static_cast<double>(k) + mu) / (static_cast<double>(k) + mu + d + 1.0);
    qk *= q;
  }
  acc += Qp * cd(sre.total(), sim.total());
  if (err_out) {
    const double s = std::sin(0.5 * std::fmod(x, kTwoPi));
    const double as = std::abs(s) > 0.0 ? std::abs(s) : kEps;
    const double lnB = std::log(0.5 / as);
    const double tail = std::exp(d * lnB - std::log(as) + std::log(c));
    const double cancel =
        8.0 * std::exp(d * std::max(lnB, 0.0)) * kEps * std::max(1.0, 1.0 / (1.0 + mu));
    *err_out = tail + cancel;
  }
  return acc;
}

cd l_impl(double x, double mu, const EvalOptions& opts) {
  if (x > kPi) return std::conj(l_impl(kTwoPi - x, mu, opts));
  const double s = std::sin(0.5 * x);
  if (s >= kSmallS) return l_quad(x, mu, opts);
  SeriesPlan plan = plan_series(s, mu, opts.abs_tol);
  if (plan.predicted <= opts.abs_tol) return series_eval(x, mu, plan, nullptr);
  return l_small_x_quad(x, mu, opts);
}

}  // namespace

ComplexValue L_infinite(const FJArgs& args, const EvalOptions& opts) {
  opts.validate();
  require_mu(args.mu, "L_infinite");
  const double xr = reduce_angle(args.x, "L_infinite");
  return from_complex(l_impl(xr, args.mu, opts));
}

ComplexValue l_direct_series(const FJArgs& args, const EvalOptions& opts, double* err_out) {
  opts.validate();
  require_mu(args.mu, "l_direct_series");
  const double xr = reduce_angle(args.x, "l_direct_series");
  const double s = std::sin(0.5 * xr);
  SeriesPlan plan = plan_series(s, args.mu, opts.abs_tol);
  if (plan.d == 0) plan = {1, 4000000, std::numeric_limits<double>::infinity()};
  return from_complex(series_eval(xr, args.mu, plan, err_out));
}

ComplexValue L_truncated(const FJArgs& args, long n, const EvalOptions& opts) {
  opts.validate();
  require_mu(args.mu, "L_truncated");
  if (n < 1) throw std::domain_error("L_truncated: n must be >= 1");
  const double xr = reduce_angle(args.x, "L_truncated");
  const cd whole = l_impl(xr, args.mu, opts);
  const cd shifted = l_impl(xr, args.mu + static_cast<double>(n), opts);
  return from_complex(whole - unit_phase(n, xr) * shifted);
}

ComplexValue l_finite_sum(const FJArgs& args, long n) {
  require_mu(args.mu, "l_finite_sum");
  require_finite(args.x, "l_finite_sum");
  if (n < 0) throw std::domain_error("l_finite_sum: n must be >= 0");
  const cd q = std::polar(1.0, args.x);
  quad::detail::Kahan<double> sre, sim;
  cd qk = 1.0;
  for (long k = 1; k <= n; ++k) {
    qk = ((k & 4095L) == 0L) ? unit_phase(k, args.x) : qk * q;
    const double b = 1.0 / (static_cast<double>(k) + args.mu);
    sre.add(qk.real() * b);
    sim.add(qk.imag() * b);
  }
  return {sre.total(), sim.total()};
}

double sine_partial_sum(double x, long n) {
  require_finite(x, "sine_partial_sum");
  if (n < 0) throw std::domain_error("sine_partial_sum: n must be >= 0");
  const cd q = std::polar(1.0, x);
  quad::detail::Kahan<double> acc;
  cd qk = 1.0;
  for (long k = 1; k <= n; ++k) {
    qk = ((k & 4095L) == 0L) ? unit_phase(k, x) : qk * q;
    acc.add(qk.imag() / static_cast<double>(k));
  }
  return acc.total();
}

ComplexValue L_odd(const FJArgsOdd& args, const EvalOptions& opts) {
  opts.validate();
  require_finite(args.x, "L_odd");
  require_finite(args.lambda, "L_odd");
  if (!(args.lambda > -1.0)) throw std::domain_error("L_odd: lambda must be > -1");
  const double sx = std::sin(args.x);
  if (sx == 0.0) throw std::domain_error("L_odd: sin x must be nonzero");
  if (std::abs(sx) < kSmallS) {
    // Change of normalization onto the full-frequency sum.
    const FJArgs a{2.0 * args.x, 0.5 * (args.lambda - 1.0)};
    const cd L = to_complex(L_infinite(a, opts));
    return from_complex(std::polar(1.0, -args.x) * L);
  }
  const double lam = args.lambda;
  const cd eix = std::polar(1.0, args.x);
  const cd e2ix = std::polar(1.0, 2.0 * args.x);
  auto f = [lam, eix, e2ix](double u) {
    const cd w = std::exp(-2.0 * u) * e2ix;
    return 2.0 * std::exp(-(lam + 1.0) * u) * eix / (1.0 - w);
  };
  return from_complex(
      quad::integrate_semi_infinite(f, lam + 1.0, opts.truncation_floor, qopts(opts)).value);
}

double S_pi(double lambda, const EvalOptions& opts) {
  opts.validate();
  require_finite(lambda, "S_pi");
  if (!(lambda > -1.0)) throw std::domain_error("S_pi: lambda must be > -1");
  auto f = [lambda](double u) {
    const double w = std::exp(-2.0 * u);
    return 2.0 * std::exp(-(lambda + 1.0) * u) / (1.0 + w);
  };
  return quad::integrate_semi_infinite(f, lambda + 1.0, opts.truncation_floor, qopts(opts))
      .value;
}

ComplexValue rotated_L(const FJArgs& args, const EvalOptions& opts) {
  opts.validate();
  require_mu(args.mu, "rotated_L");
  const double xr = reduce_angle(args.x, "rotated_L");
  const double mu = args.mu;
  cd value;
  if (xr <= kPi && std::sin(0.5 * xr) >= kSmallS) {
    // Shifted contour z = −ix + u: the integrand e^{-μz}/(e^z − 1) carries the
    // phase at every node; written with nonpositive real exponents throughout.
    const cd eix = std::polar(1.0, xr);
    const cd ephase = std::polar(1.0, (mu + 1.0) * xr);
    auto f = [mu, eix, ephase](double u) {
      const cd w = std::exp(-u) * eix;
      return std::exp(-(mu + 1.0) * u) * ephase / (1.0 - w);
    };
    value =
        quad::integrate_semi_infinite(f, mu + 1.0, opts.truncation_floor, qopts(opts)).value;
  } else {
    value = std::polar(1.0, mu * xr) * l_impl(xr, mu, opts);
  }
  if (args.x != xr) value *= std::polar(1.0, mu * (args.x - xr));
  return from_complex(value);
}

}  // namespace fjb::fjsums
