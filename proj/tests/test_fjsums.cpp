#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "fjb/fjsums.hpp"
#include "fjb/quadrature.hpp"
#include "fjb/specfun.hpp"

using namespace fjb;
using namespace fjb::fjsums;

namespace {

std::complex<double> cval(const ComplexValue& v) { return {v.re, v.im}; }

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("infinite sum: frozen cross-checked values") {
  const auto a = L_infinite({1.0, 2.5});
  CHECK(a.re == doctest::Approx(-0.08151263884558646837).epsilon(1e-12));
  CHECK(a.im == doctest::Approx(0.30413675815577214886).epsilon(1e-12));

  const auto b = L_infinite({0.1, 3.0});
  CHECK(b.re == doctest::Approx(0.83866569967167593).epsilon(1e-12));
  CHECK(b.im == doctest::Approx(1.02087469641471987).epsilon(1e-12));

  const auto c = L_infinite({0.004, 0.3});
  CHECK(c.re == doctest::Approx(5.11531580196069704).epsilon(1e-11));
  CHECK(c.im == doctest::Approx(1.56145907466548678).epsilon(1e-11));
}

TEST_CASE("infinite sum at zero shift has elementary closed form") {
  for (const double x : {0.5, 1.5, 3.0}) {
    const auto v = L_infinite({x, 0.0});
    CHECK(v.im == doctest::Approx((kPi - x) / 2.0).epsilon(1e-12));
    CHECK(v.re ==
          doctest::Approx(-std::log(2.0 * std::sin(x / 2.0))).epsilon(1e-12));
  }
  const auto at_pi = L_infinite({kPi, 0.0});
  CHECK(at_pi.re == doctest::Approx(-std::log(2.0)).epsilon(1e-13));
  CHECK(at_pi.im == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("head reconstruction matches the exact finite sum") {
  const FJArgs args{1.0, 0.5};
  const auto rebuilt = L_truncated(args, 10);
  const auto exact = l_finite_sum(args, 10);
  CHECK(rebuilt.re == doctest::Approx(exact.re).epsilon(1e-11));
  CHECK(rebuilt.im == doctest::Approx(exact.im).epsilon(1e-11));
}

TEST_CASE("quadrature path and accelerated series path agree on random inputs") {
  std::mt19937_64 rng(20240517);
  auto uniform = [&rng](double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  };
  EvalOptions tol;
  tol.abs_tol = 1e-9;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = uniform(0.05, kPi - 0.05);
    const double mu = uniform(-0.45, 20.0);
    const auto lap = L_infinite({x, mu});
    const auto ser = l_direct_series({x, mu}, tol);
    const double diff = std::abs(cval(lap) - cval(ser));
    if (diff > worst) worst = diff;
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("odd-normalized variant: frozen values and cross-normalization") {
  const auto a = L_odd({0.8, 3.0});
  CHECK(a.re == doctest::Approx(0.09011060516933490).epsilon(1e-12));
  CHECK(a.im == doctest::Approx(0.39279378995395778).epsilon(1e-12));

  const auto b = L_odd({1.2, 0.5});
  CHECK(b.re == doctest::Approx(0.19773420337474637).epsilon(1e-12));
  CHECK(b.im == doctest::Approx(0.99295930832756337).epsilon(1e-12));

  const auto direct = cval(L_odd({0.4, 2.0}));
  const auto via_L =
      std::polar(1.0, -0.4) * cval(L_infinite({0.8, 0.5}));
  CHECK(direct.real() == doctest::Approx(via_L.real()).epsilon(1e-11));
  CHECK(direct.imag() == doctest::Approx(via_L.imag()).epsilon(1e-11));
}

TEST_CASE("odd-normalized variant near vanishing sine matches raw integral") {
  const double x = 0.005;
  const double lambda = 2.0;
  quad::Options opt;
  opt.abs_tol = 1e-12;
  long evals = 0;
  (void)evals;
  auto integrand_re = [x, lambda](double u) {
    const std::complex<double> den = std::sinh(std::complex<double>(u, -x));
    return (std::exp(-lambda * u) / den).real();
  };
  auto integrand_im = [x, lambda](double u) {
    const std::complex<double> den = std::sinh(std::complex<double>(u, -x));
    return (std::exp(-lambda * u) / den).imag();
  };
  // sin x ≠ 0 keeps the kernel bounded, but it peaks sharply at u ≈ x, so the
  // oracle splits there; by u = 20 the integrand is below 2e-26.
  auto piecewise = [&opt, x](auto&& f) {
    return quad::integrate(f, 0.0, x, opt).value +
           quad::integrate(f, x, 1.0, opt).value +
           quad::integrate(f, 1.0, 20.0, opt).value;
  };
  const double oracle_re = piecewise(integrand_re);
  const double oracle_im = piecewise(integrand_im);
  const auto v = L_odd({x, lambda});
  CHECK(v.re == doctest::Approx(oracle_re).epsilon(1e-9));
  CHECK(v.im == doctest::Approx(oracle_im).epsilon(1e-9));
}

TEST_CASE("odd-normalized variant at zero decay has constant imaginary part") {
  CHECK(L_odd({1.3, 0.0}).im == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  CHECK(L_odd({2.8, 0.0}).im == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("odd-normalized variant at quarter period reduces to the "
          "alternating transform") {
  const auto v = L_odd({kPi / 2.0, 1.7});
  CHECK(v.re == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(v.im == doctest::Approx(S_pi(1.7)).epsilon(1e-12));
}

TEST_CASE("alternating transform closed forms") {
  CHECK(S_pi(0.0) == doctest::Approx(kPi / 2.0).epsilon(1e-13));
  CHECK(S_pi(1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("phase-rotated evaluation matches direct rotation") {
  const FJArgs args{1.0, 4.0};
  const auto rot = cval(rotated_L(args));
  const auto ref = std::polar(1.0, args.x * args.mu) * cval(L_infinite(args));
  CHECK(rot.real() == doctest::Approx(ref.real()).epsilon(1e-11));
  CHECK(rot.imag() == doctest::Approx(ref.imag()).epsilon(1e-11));
}

TEST_CASE("phase-rotated sum at shift -1/2 has constant imaginary part") {
  CHECK(rotated_L({0.3, -0.5}).im == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  CHECK(rotated_L({2.0, -0.5}).im == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("phase-rotated sum satisfies the half-angle derivative identity") {
  // d/dx [e^{ixμ} L(x,μ)] = −e^{ix(μ+1/2)} / (2 sin(x/2))
  const double x = 1.2;
  const double mu = 3.0;
  const double h = 1e-4;
  const auto plus = cval(rotated_L({x + h, mu}));
  const auto minus = cval(rotated_L({x - h, mu}));
  const auto fd = (plus - minus) / (2.0 * h);
  const auto expected =
      -std::polar(1.0, x * (mu + 0.5)) / (2.0 * std::sin(x / 2.0));
  CHECK(fd.real() == doctest::Approx(expected.real()).epsilon(1e-5));
  CHECK(fd.imag() == doctest::Approx(expected.imag()).epsilon(1e-5));
}

TEST_CASE("sine partial sum equals imaginary part of the finite sum") {
  const double x = 0.7;
  const long n = 25;
  CHECK(sine_partial_sum(x, n) ==
        doctest::Approx(l_finite_sum({x, 0.0}, n).im).epsilon(1e-13));
  CHECK(std::abs(sine_partial_sum(kPi, 7)) < 1e-14);
}

TEST_CASE("scaled sums approach the exponential-type integral") {
  // t fixed, x = t/s, μ = λ s with s → ∞:  L(x, μ) → E(t) pointwise.
  const double t = 1.5;
  double prev = 1e300;
  const auto e = specfun::exp_integral_E(t);
  for (const double s : {10.0, 100.0, 1000.0}) {
    const auto v = cval(L_infinite({t / s, s}));
    const double dev = std::abs(v - cval(e));
    CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("domain guards reject lattice angles and bad shifts") {
  CHECK_THROWS_AS(L_infinite({0.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(L_infinite({2.0 * kPi, 1.0}), std::domain_error);
  CHECK_THROWS_AS(L_infinite({1.0, -1.0}), std::domain_error);
  CHECK_THROWS_AS(L_truncated({1.0, 0.5}, 0), std::domain_error);
  CHECK_THROWS_AS(L_odd({kPi, 2.0}), std::domain_error);
  CHECK_THROWS_AS(L_odd({0.0, 1.0}), std::domain_error);
}
