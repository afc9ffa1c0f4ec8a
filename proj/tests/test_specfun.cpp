#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "fjb/specfun.hpp"

using namespace fjb;
using namespace fjb::specfun;

namespace {

// Composite Simpson oracle, independent of the library's quadrature.
template <class F>
double simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("sine integral: frozen values and oracle") {
  CHECK(sine_integral(10.0) == doctest::Approx(1.6583475942188740).epsilon(1e-14));
  CHECK(si(10.0) == doctest::Approx(0.08755126742397743).epsilon(1e-13));
  const double oracle =
      simpson([](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, 2.0, 2000);
  CHECK(sine_integral(2.0) == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(sine_integral(0.0) == 0.0);
}

TEST_CASE("sine integral is continuous across the series/asymptotic seam") {
  EvalOptions tight;
  tight.abs_tol = 1e-14;
  CHECK(sine_integral(4.0, tight) ==
        doctest::Approx(sine_integral(std::nextafter(4.0, 5.0), tight))
            .epsilon(1e-12));
}

TEST_CASE("cosine integral: frozen values and oracle") {
  CHECK(cosine_integral(1.0) == doctest::Approx(0.33740392290096813).epsilon(1e-14));
  CHECK(cin(1.0) == doctest::Approx(0.23981174200056473).epsilon(1e-13));
  const double oracle =
      simpson([](double t) { return t == 0.0 ? 0.0 : (1.0 - std::cos(t)) / t; },
              0.0, 3.0, 3000);
  CHECK(cin(3.0) == doctest::Approx(oracle).epsilon(1e-10));
  EvalOptions tight;
  tight.abs_tol = 1e-14;
  CHECK(cosine_integral(4.0, tight) ==
        doctest::Approx(cosine_integral(std::nextafter(4.0, 5.0), tight))
            .epsilon(1e-12));
  CHECK_THROWS_AS(cosine_integral(0.0), std::domain_error);
  CHECK_THROWS_AS(cosine_integral(-1.0), std::domain_error);
}

TEST_CASE("exponential-type integral against real/imaginary oracles") {
  // E(t) = int_0^inf e^{-tu} (u + i)/(u^2+1) du
  for (double t : {1.0, 5.0}) {
    const double cut = 40.0 / t;
    const double re_oracle = simpson(
        [&](double u) { return std::exp(-t * u) * u / (1.0 + u * u); }, 0.0, cut,
        20000);
    const double im_oracle = simpson(
        [&](double u) { return std::exp(-t * u) / (1.0 + u * u); }, 0.0, cut, 20000);
    const ComplexValue e = exp_integral_E(t);
    CHECK(e.re == doctest::Approx(re_oracle).epsilon(1e-9));
    CHECK(e.im == doctest::Approx(im_oracle).epsilon(1e-9));
  }
  const ComplexValue e1 = exp_integral_E(1.0);
  CHECK(e1.re == doctest::Approx(0.34337796155642703).epsilon(1e-13));
  CHECK(e1.im == doctest::Approx(0.62144962423581336).epsilon(1e-13));
  const ComplexValue e5 = exp_integral_E(5.0);
  CHECK(e5.re == doctest::Approx(0.033896220611621765).epsilon(1e-12));
  CHECK(e5.im == doctest::Approx(0.18814277457141822).epsilon(1e-12));
  CHECK_THROWS_AS(exp_integral_E(0.0), std::domain_error);
}

TEST_CASE("rotating E recovers the shifted sine integral") {
  for (double t : {0.7, 3.0, 12.0}) {
    const ComplexValue e = exp_integral_E(t);
    // Re(i e^{it} E(t)) = -E_im cos t - E_re sin t
    const double lhs = -e.im * std::cos(t) - e.re * std::sin(t);
    CHECK(lhs == doctest::Approx(si(t)).epsilon(1e-12));
  }
}

TEST_CASE("auxiliary components are positive, decreasing, and match E") {
  double prev_f = 1e300;
  double prev_g = 1e300;
  for (double t : {0.3, 0.8, 2.0, 6.0, 15.0}) {
    const AuxExpIntegral a = aux_exp_integral(t);
    const ComplexValue e = exp_integral_E(t);
    CHECK(a.g == doctest::Approx(e.re).epsilon(1e-14));
    CHECK(a.f == doctest::Approx(e.im).epsilon(1e-14));
    CHECK(a.f > 0.0);
    CHECK(a.g > 0.0);
    CHECK(a.f < prev_f);
    CHECK(a.g < prev_g);
    prev_f = a.f;
    prev_g = a.g;
  }
}

TEST_CASE("comparison function: frozen values") {
  CHECK(comparison_M(1.0) == doctest::Approx(0.75461002577097217).epsilon(1e-13));
  CHECK(comparison_M(0.3) == doctest::Approx(1.5650731509192031).epsilon(1e-13));
  CHECK_THROWS_AS(comparison_M(0.0), std::domain_error);
}

TEST_CASE("comparison function: large-argument expansion") {
  const double t = 100.0;
  const double expansion = 1.0 / t - 1.0 / (t * t * t) + 9.0 / std::pow(t, 5);
  CHECK(std::abs(comparison_M(t) - expansion) < 3e-12);
}

TEST_CASE("comparison function: logarithmic small-argument behavior") {
  for (double t : {0.001, 0.01, 0.1}) {
    const double lead = -std::log(t) + kC1 + t;
    CHECK(std::abs(comparison_M(t) - lead) < t * t * (-std::log(t) + 2.0));
  }
}

TEST_CASE("comparison function satisfies its differential equation") {
  const double t = 2.0;
  const double h = 1e-3;
  const double m0 = comparison_M(t);
  const double mp = comparison_M(t + h);
  const double mm = comparison_M(t - h);
  const double d1 = (mp - mm) / (2.0 * h);
  const double d2 = (mp - 2.0 * m0 + mm) / (h * h);
  CHECK(t * d2 + d1 + t * m0 == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("|E| is dominated by M") {
  for (double t : {0.05, 0.2, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    CHECK(abs(exp_integral_E(t)) < comparison_M(t));
  }
}

TEST_CASE("digamma closed forms") {
  CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-15));
  CHECK(digamma(0.5) == doctest::Approx(-kEulerGamma - 2.0 * kLn2).epsilon(1e-15));
  CHECK(digamma(10.0) == doctest::Approx(2.2517525890667211).epsilon(1e-15));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - kEulerGamma).epsilon(1e-14));
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK(digamma(-2.5) == doctest::Approx(1.10315664064524319).epsilon(1e-14));
  CHECK_THROWS_AS(digamma(-3.0), std::domain_error);
}

TEST_CASE("log-gamma closed forms and recurrence") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(log_gamma(1.5) == doctest::Approx(-0.12078223763524522).epsilon(1e-14));
  CHECK(std::exp(log_gamma(5.7) - log_gamma(4.7)) == doctest::Approx(4.7).epsilon(1e-13));
  CHECK(log_gamma(25.0) == doctest::Approx(std::lgamma(25.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
}

TEST_CASE("arccot conventions") {
  CHECK(arccot(0.0) == doctest::Approx(0.5 * 3.14159265358979323846).epsilon(1e-16));
  CHECK(arccot(1.0) == doctest::Approx(0.25 * 3.14159265358979323846).epsilon(1e-15));
  CHECK(arccot(1e8) == doctest::Approx(1e-8).epsilon(1e-10));
  CHECK_THROWS_AS(arccot(-0.5), std::domain_error);
}

TEST_CASE("named constants") {
  CHECK(kC2 == doctest::Approx(std::log(1.0 + std::sqrt(2.0))).epsilon(1e-16));
  CHECK(kC3 == doctest::Approx(std::sqrt(1.0 + kPi * kPi / 4.0)).epsilon(1e-16));
  CHECK(kC1 == doctest::Approx(kLn2 - kEulerGamma).epsilon(1e-16));
}
