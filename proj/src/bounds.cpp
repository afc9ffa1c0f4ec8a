#include "fjb/bounds.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "fjb/quadrature.hpp"
#include "fjb/specfun.hpp"

namespace fjb::bounds {

namespace {

constexpr double kPi = specfun::kPi;

[[noreturn]] void fail(const char* msg) { throw std::domain_error(msg); }

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw std::domain_error(std::string(name) + " must be finite");
  }
}

struct BoundName {
  BoundId id;
  const char* name;
};

constexpr BoundName kBoundNames[] = {
    {BoundId::ArccotEnvelope, "ArccotEnvelope"},
    {BoundId::MEnvelope, "MEnvelope"},
    {BoundId::LogEnvelope, "LogEnvelope"},
    {BoundId::FracEnvelope, "FracEnvelope"},
    {BoundId::SecEnvelope, "SecEnvelope"},
    {BoundId::EbycosRhs, "EbycosRhs"},
    {BoundId::FJTuran, "FJTuran"},
    {BoundId::Fejer1928, "Fejer1928"},
    {BoundId::Turan1952, "Turan1952"},
    {BoundId::AK2003, "AK2003"},
    {BoundId::BK1998, "BK1998"},
    {BoundId::Koumandos2012, "Koumandos2012"},
    {BoundId::AlKou12, "AlKou12"},
    {BoundId::AKEvenUpper, "AKEvenUpper"},
    {BoundId::TaylorSimple, "TaylorSimple"},
    {BoundId::TaylorMp, "TaylorMp"},
    {BoundId::TaylorLog1z, "TaylorLog1z"},
    {BoundId::TaylorMhat, "TaylorMhat"},
};

double envelope_arg(double mu, double x) { return (2.0 * mu + 1.0) * std::sin(0.5 * x); }

}  // namespace

const char* to_string(BoundId id) {
  for (const auto& e : kBoundNames) {
    if (e.id == id) return e.name;
  }
  return "?";
}

std::optional<BoundId> bound_from_string(std::string_view name) {
  for (const auto& e : kBoundNames) {
    if (name == e.name) return e.id;
  }
  return std::nullopt;
}

double arccot_envelope(double mu, double x) {
  require_finite(mu, "mu");
  require_finite(x, "x");
  if (mu < -0.5) fail("arccot_envelope requires mu >= -1/2");
  if (x < 0.0 || x > kPi) fail("arccot_envelope requires 0 <= x <= pi");
  return specfun::arccot(envelope_arg(mu, x));
}

double m_envelope(double mu, double x, const EvalOptions& opts) {
  require_finite(mu, "mu");
  require_finite(x, "x");
  if (mu <= -0.5) fail("m_envelope requires mu > -1/2");
  if (x <= 0.0 || x >= kPi) fail("m_envelope requires 0 < x < pi");
  return specfun::comparison_M(envelope_arg(mu, x), opts);
}

double m_envelope_odd(double lambda, double x, const EvalOptions& opts) {
  require_finite(lambda, "lambda");
  require_finite(x, "x");
  if (lambda <= 0.0) fail("m_envelope_odd requires lambda > 0");
  if (x <= 0.0 || x >= kPi) fail("m_envelope_odd requires 0 < x < pi");
  return specfun::comparison_M(lambda * std::sin(x), opts);
}

double log_envelope(double mu, double x) {
  require_finite(mu, "mu");
  require_finite(x, "x");
  const double a = envelope_arg(mu, x);
  if (!(a > 0.0 && a < 1.0)) {
    fail("log_envelope requires 0 < (2*mu+1)*sin(x/2) < 1");
  }
  return -std::log(a) + specfun::kC2;
}

double frac_envelope(double mu, double x) {
  require_finite(mu, "mu");
  require_finite(x, "x");
  if (mu <= -0.5) fail("frac_envelope requires mu > -1/2");
  if (x <= 0.0 || x >= kPi) fail("frac_envelope requires 0 < x < pi");
  return 1.0 / envelope_arg(mu, x);
}

double sec_envelope(double lambda, double x) {
  require_finite(lambda, "lambda");
  require_finite(x, "x");
  if (x <= 0.0 || x >= 0.5 * kPi) fail("sec_envelope requires 0 < x < pi/2");
  // lambda = 0 yields an infinite (vacuous) bound rather than an error.
  return 1.0 / (std::abs(lambda) * std::cos(x));
}

double ebycos_rhs(double lambda, double x, const EvalOptions& opts) {
  require_finite(lambda, "lambda");
  require_finite(x, "x");
  if (lambda <= 0.0) fail("ebycos_rhs requires lambda > 0");
  if (x <= 0.0 || x >= 0.5 * kPi) fail("ebycos_rhs requires 0 < x < pi/2");
  return 1.0 / lambda - specfun::comparison_M(lambda, opts) +
         specfun::comparison_M(lambda * std::cos(x), opts);
}

double legendre_p(int n, double t) {
  if (n < 0) fail("legendre_p requires n >= 0");
  require_finite(t, "t");
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = t;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * t * p - k * pm1) / (k + 1.0);
    pm1 = p;
    p = next;
  }
  return p;
}

double alkou_delta(long n) {
  if (n < 1) fail("alkou_delta requires n >= 1");
  const double m = static_cast<double>((n - 1) / 2);
  const double lg = specfun::log_gamma(m + 1.0) - specfun::log_gamma(m + 1.5);
  return (m + 1.0) / (m + 1.5) * std::exp(2.0 * lg);
}

double bk1998_window_lo(long n) { return 3.0 * kPi / (2.0 * n + 1.0); }

double bk1998_window_hi(long n) { return kPi - 3.0 * kPi / (2.0 * n + 1.0); }

ClassicalBounds classical_bounds(long n, double x) {
  if (n < 1) fail("classical_bounds requires n >= 1");
  require_finite(x, "x");
  if (x <= 0.0 || x >= kPi) fail("classical_bounds requires 0 < x < pi");
  const double h = 0.5 * x;
  const double sh = std::sin(h);
  const double ch = std::cos(h);
  const double cot_h = ch / sh;
  const double saw = 0.5 * (kPi - x);
  ClassicalBounds b;
  b.fj_turan = saw;
  b.fejer1928 = std::sin(x) / 3.0 + std::sin(n * x) / (2.0 * n);
  b.turan1952 = 4.0 * sh * sh * (cot_h - saw);
  b.ak2003 = x * x * (cot_h - saw);
  b.bk1998 = (1.0 - sh) / ch;
  const double w = 1.0 - x / kPi;
  b.koumandos2012 = x * w * w * w;
  b.alkou12 = 0.25 * kPi * alkou_delta(n) * cot_h *
              (1.0 - legendre_p(static_cast<int>(n), std::cos(x)));
  b.ak_even_upper = kAlphaEven * (kPi - x);
  return b;
}

TaylorBounds taylor_bounds(const TaylorPoint& pt) {
  require_finite(pt.z_re, "z_re");
  require_finite(pt.z_im, "z_im");
  if (pt.n < 1) fail("taylor_bounds requires n >= 1");
  double r = std::hypot(pt.z_re, pt.z_im);
  if (r > 1.0 + 1e-12) fail("taylor_bounds requires |z| <= 1");
  if (r > 1.0) r = 1.0;  // points on the unit circle built from cos/sin
  const double dist = std::hypot(1.0 - pt.z_re, pt.z_im);
  if (dist <= 1e-15) fail("taylor_bounds requires z != 1");
  const double np = static_cast<double>(pt.n);
  const double q = (np + 0.5) * dist;
  const double rp = std::pow(r, np + 1.0);
  TaylorBounds out;
  out.simple = rp / q;
  if (r < 1.0) {
    const double p = (np + 1.0) * (1.0 - r);
    out.mp = (p >= std::exp(-1.0)) ? 1.0 / (std::exp(1.0) * p) : -std::log(p);
    if (q < 1.0) out.log1z = rp * (-std::log(q) + specfun::kC3);
  }
  // The logarithmic alternative in the combined bound stays valid on the
  // circle itself: there q equals (2n+1) sin(θ/2), the argument of the
  // envelope it descends from.
  double combined = 1.0 / q;
  if (q < 1.0) combined = std::min(combined, -std::log(q) + specfun::kC3);
  out.mhat = rp * combined;
  return out;
}

ComplexValue taylor_remainder(const TaylorPoint& pt) {
  require_finite(pt.z_re, "z_re");
  require_finite(pt.z_im, "z_im");
  if (pt.n < 1) fail("taylor_remainder requires n >= 1");
  const double r = std::hypot(pt.z_re, pt.z_im);
  if (r > 1.0 + 1e-12) fail("taylor_remainder requires |z| <= 1");
  const double dist = std::hypot(1.0 - pt.z_re, pt.z_im);
  if (dist <= 1e-15) fail("taylor_remainder requires z != 1");

  if (r > 0.9999) {
    // Near/on the circle: closed form in extended precision.
    const std::complex<long double> z(pt.z_re, pt.z_im);
    std::complex<long double> partial = 0.0L;
    std::complex<long double> zk = 1.0L;
    for (long k = 1; k <= pt.n; ++k) {
      zk *= z;
      partial += zk / static_cast<long double>(k);
    }
    const std::complex<long double> rem = -std::log(1.0L - z) - partial;
    return {static_cast<double>(rem.real()), static_cast<double>(rem.imag())};
  }

  // Interior: sum the tail directly with compensation, stopping once the
  // geometric bound on the remainder drops below 1e-15.
  if (r == 0.0) return {0.0, 0.0};
  const double theta = std::atan2(pt.z_im, pt.z_re);
  const double lnr = std::log(r);
  const std::complex<double> z(pt.z_re, pt.z_im);
  std::complex<double> zk =
      std::polar(std::exp((pt.n + 1.0) * lnr), std::fmod((pt.n + 1.0) * theta, 2.0 * kPi));
  quad::detail::Kahan<double> sre;
  quad::detail::Kahan<double> sim;
  const double geom = 1.0 / (1.0 - r);
  for (long k = pt.n + 1;; ++k) {
    sre.add(zk.real() / static_cast<double>(k));
    sim.add(zk.imag() / static_cast<double>(k));
    const double bound = std::exp((k + 1.0) * lnr) * geom / (k + 1.0);
    if (bound < 1e-15) break;
    zk *= z;
    if ((k & 4095L) == 0) {
      const long double ph =
          std::fmod(static_cast<long double>(k + 1) * static_cast<long double>(theta),
                    6.283185307179586476925286766559005768L);
      zk = std::polar(std::exp((k + 1.0) * lnr), static_cast<double>(ph));
    }
  }
  return {sre.total(), sim.total()};
}

}  // namespace fjb::bounds
