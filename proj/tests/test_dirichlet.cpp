#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "fjb/dirichlet.hpp"
#include "fjb/fjsums.hpp"
#include "fjb/quadrature.hpp"
#include "fjb/specfun.hpp"

using namespace fjb;
using namespace fjb::dirichlet;

namespace {

constexpr double kPi = 3.14159265358979323846;

template <class F>
double simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

}  // namespace

TEST_CASE("kernel peak value and cosine expansion") {
  for (const int n : {1, 5, 10}) {
    CHECK(dirichlet_kernel(0.0, n) == 2.0 * n + 1.0);
  }
  const double x = 0.7;
  double cosine_form = 1.0;
  for (int k = 1; k <= 8; ++k) cosine_form += 2.0 * std::cos(k * x);
  CHECK(dirichlet_kernel(x, 8) == doctest::Approx(cosine_form).epsilon(1e-12));
  CHECK(dirichlet_kernel(kPi, 1) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("sine-kernel integral: unit frequency and frozen values") {
  CHECK(ssi({0.5, 1.0}) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ssi({2.9, 1.0}) == doctest::Approx(2.9).epsilon(1e-12));
  CHECK(ssi({2.0, 0.5}) == doctest::Approx(1.22619117088351707).epsilon(1e-11));
  CHECK(ssi({3.0, 0.4}) == doctest::Approx(2.91333554301557445).epsilon(1e-11));
  // sin t ≤ t on the range, so the kernel dominates the plain sinc integral.
  CHECK(ssi({2.0, 0.5}) > specfun::sine_integral(0.5 * 2.0));
}

TEST_CASE("cosine-kernel integral at zero frequency is the inverse Gudermannian") {
  for (const double x : {0.3, 1.0}) {
    CHECK(cci({x, 0.0}) == doctest::Approx(std::atanh(std::sin(x))).epsilon(1e-11));
  }
}

TEST_CASE("direct and Laplace paths of the cosine-kernel transform agree") {
  std::mt19937_64 rng(77002);
  auto uniform = [&rng](double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  };
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = uniform(0.05, 1.52);
    const double lambda = uniform(0.3, 40.0);
    const auto a = eci({x, lambda});
    const auto b = eci_laplace({x, lambda});
    const double diff = std::hypot(a.re - b.re, a.im - b.im);
    if (diff > worst) worst = diff;
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("cosine-kernel transform: frozen cross-checked values") {
  const auto a = eci({0.5, 3.0});
  CHECK(a.re == doctest::Approx(0.34147098480789651).epsilon(1e-12));
  CHECK(a.im == doctest::Approx(0.32911345368813757).epsilon(1e-12));
  const auto b = eci({1.2, 8.0});
  CHECK(b.re == doctest::Approx(-0.12945523536322261).epsilon(1e-12));
  CHECK(b.im == doctest::Approx(0.40737170710769213).epsilon(1e-12));
  CHECK(sci({0.5, 3.0}) == doctest::Approx(a.im).epsilon(1e-13));
  CHECK(cci({0.5, 3.0}) == doctest::Approx(a.re).epsilon(1e-13));
}

TEST_CASE("half-angle kernel recovers the rotated-sum imaginary part") {
  {
    const double x = 1.0;
    const double mu = 4.5;
    const double via_kernel = series_remainder_via_kernel(x, mu);
    const double via_sum = fjsums::rotated_L({x, mu}).im;
    CHECK(via_kernel == doctest::Approx(via_sum).epsilon(1e-9));
  }
  {
    const double x = 0.9;
    const long n = 12;
    const double via_kernel = series_remainder_via_kernel(x, static_cast<double>(n));
    const double expected = (kPi - x) / 2.0 - fjsums::sine_partial_sum(x, n);
    CHECK(via_kernel == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("cosine half-angle integral is additive and matches an oracle") {
  const double mu = 1.0;
  const double sum_of_parts =
      cos_kernel_integral(0.5, 1.2, mu) + cos_kernel_integral(1.2, 2.0, mu);
  CHECK(cos_kernel_integral(0.5, 2.0, mu) ==
        doctest::Approx(sum_of_parts).epsilon(1e-11));
  const double oracle = simpson(
      [mu](double y) {
        return std::cos((mu + 0.5) * y) / (2.0 * std::sin(y / 2.0));
      },
      0.5, 1.0, 2000);
  CHECK(cos_kernel_integral(0.5, 1.0, mu) == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("partial sums of sin(kx)/k equal the integrated kernel") {
  const long n = 7;
  const double x = 2.0;
  quad::Options opt;
  opt.abs_tol = 1e-12;
  const double integral = quad::integrate_oscillatory(
      [n](double t) { return dirichlet_kernel(t, static_cast<int>(n)); }, 0.0,
      x, kPi / (n + 0.5), opt).value;
  CHECK(fjsums::sine_partial_sum(x, n) ==
        doctest::Approx(0.5 * (integral - x)).epsilon(1e-10));
}

TEST_CASE("domain guards on integration limits and frequencies") {
  CHECK_THROWS_AS(ssi({0.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(ssi({kPi, 1.0}), std::domain_error);
  CHECK_THROWS_AS(eci({kPi / 2.0, 3.0}), std::domain_error);
  CHECK_THROWS_AS(eci({-0.1, 3.0}), std::domain_error);
  CHECK_THROWS_AS(series_remainder_via_kernel(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(cos_kernel_integral(0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(cos_kernel_integral(1.0, 0.5, 1.0), std::domain_error);
}
