#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

// Adaptive Gauss-Kronrod (G7/K15) quadrature over finite intervals, with
// drivers for exponentially decaying semi-infinite integrands and for
// finite-interval oscillatory integrands split at half-periods.

namespace fjb::quad {

template <class T>
struct IntegralResult {
  T value{};
  double err = 0.0;  // accumulated absolute error estimate (incl. truncation)
  long evaluations = 0;
};

struct Options {
  double abs_tol = 1e-12;
  int max_depth = 64;       // bisection depth cap per initial interval
  long max_panels = 65536;  // global panel budget
};

namespace detail {

// Kronrod-15 abscissae on (0,1]-side of [-1,1]; odd indices are the Gauss-7 nodes.
inline constexpr double kXgk[8] = {
    0.99145537112081263920685469752632851664204433837033,
    0.94910791234275852452618968404785126240077093767062,
    0.86486442335976907278971278864092620121097230707409,
    0.74153118559939443986386477328078840707414764714139,
    0.58608723546769113029414483825872959843678075060436,
    0.40584515137739716690660641207696146334738201409937,
    0.20778495500789846760068940377324491347978440714517,
    0.0};
inline constexpr double kWgk[8] = {
    0.02293532201052922496373200805896959199356081127575,
    0.06309209262997855329070066318920428666507115721155,
    0.10479001032225018383987632254151801744375665421383,
    0.14065325971552591874518959051023792039988975724800,
    0.16900472663926790282658342659855028410624490030294,
    0.19035057806478540991325640242101368282607807545536,
    0.20443294007529889241416199923464908471651760418072,
    0.20948214108472782801299917489171426369776208022370};
inline constexpr double kWg[4] = {
    0.12948496616886969327061143267908201832858740225995,
    0.27970539148927666790146777142377958248692506522659,
    0.38183005050511894495036977548897513387836508353386,
    0.41795918367346938775510204081632653061224489795918};

inline double component_abs(double v) { return std::abs(v); }
inline double component_abs(const std::complex<double>& v) {
  return std::max(std::abs(v.real()), std::abs(v.imag()));
}

// Neumaier-compensated accumulator, componentwise for complex values.
template <class T>
struct Kahan {
  T sum{};
  T comp{};
  void add(const T& v) {
    T t = sum + v;
    if constexpr (std::is_same_v<T, double>) {
      comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
    } else {
      double re = (std::abs(sum.real()) >= std::abs(v.real()))
                      ? (sum.real() - t.real()) + v.real()
                      : (v.real() - t.real()) + sum.real();
      double im = (std::abs(sum.imag()) >= std::abs(v.imag()))
                      ? (sum.imag() - t.imag()) + v.imag()
                      : (v.imag() - t.imag()) + sum.imag();
      comp += T(re, im);
    }
    sum = t;
  }
  T total() const { return sum + comp; }
};

template <class T>
struct PanelRec {
  double a, b;
  T integral;
  double err;
  int depth;
};

}  // namespace detail

template <class F>
auto gk15(F&& f, double a, double b, long& evals) {
  using T = std::decay_t<decltype(f(0.5 * (a + b)))>;
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fc = f(c);
  T ik = detail::kWgk[7] * fc;
  T ig = detail::kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * detail::kXgk[j];
    T f1 = f(c - dx);
    T f2 = f(c + dx);
    ik += detail::kWgk[j] * (f1 + f2);
    if (j % 2 == 1) ig += detail::kWg[j / 2] * (f1 + f2);
  }
  evals += 15;
  struct R {
    T integral;
    double err;
  };
  return R{h * ik, detail::component_abs(h * (ik - ig))};
}

// Globally adaptive bisection: repeatedly split the panel with the largest
// error estimate until the accumulated estimate meets abs_tol or the budget
// runs out.  Deterministic: ties broken by interval start.
template <class F>
auto integrate(F&& f, double a, double b, const Options& opt) {
  using T = std::decay_t<decltype(f(0.5 * (a + b)))>;
  using Panel = detail::PanelRec<T>;
  long evals = 0;
  IntegralResult<T> out;
  if (!(b > a)) return out;

  auto cmp = [](const Panel& p, const Panel& q) {
    if (p.err != q.err) return p.err < q.err;
    return p.a > q.a;
  };
  std::vector<Panel> heap;
  auto first = gk15(f, a, b, evals);
  heap.push_back({a, b, first.integral, first.err, 0});
  double total_err = first.err;

  while (total_err > opt.abs_tol && static_cast<long>(heap.size()) < opt.max_panels) {
    std::pop_heap(heap.begin(), heap.end(), cmp);
    Panel worst = heap.back();
    const double width = worst.b - worst.a;
    if (worst.depth >= opt.max_depth ||
        width <= 4e-16 * (std::abs(worst.a) + std::abs(worst.b))) {
      std::push_heap(heap.begin(), heap.end(), cmp);
      break;  // cannot usefully refine the dominant panel
    }
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = gk15(f, worst.a, mid, evals);
    auto right = gk15(f, mid, worst.b, evals);
    total_err += left.err + right.err - worst.err;
    heap.push_back({worst.a, mid, left.integral, left.err, worst.depth + 1});
    std::push_heap(heap.begin(), heap.end(), cmp);
    heap.push_back({mid, worst.b, right.integral, right.err, worst.depth + 1});
    std::push_heap(heap.begin(), heap.end(), cmp);
  }

  std::sort(heap.begin(), heap.end(),
            [](const Panel& p, const Panel& q) { return p.a < q.a; });
  detail::Kahan<T> acc;
  double err = 0.0;
  for (const auto& p : heap) {
    acc.add(p.integral);
    err += p.err;
  }
  out.value = acc.total();
  out.err = err;
  out.evaluations = evals;
  return out;
}

// ∫_0^∞ f(u) du for |f(u)| decaying like e^{-decay*u}: truncate where the
// decay factor reaches trunc_floor, split the range geometrically so the
// adaptive pass stays shallow, and report the truncation tail in err.
template <class F>
auto integrate_semi_infinite(F&& f, double decay, double trunc_floor, const Options& opt) {
  using T = std::decay_t<decltype(f(1.0))>;
  if (!(decay > 0.0)) throw std::invalid_argument("integrate_semi_infinite: decay must be > 0");
  const double U = std::log(1.0 / trunc_floor) / decay;

  std::vector<double> cuts{0.0};
  for (double c = std::min(1.0, 0.5 * U); c < U; c *= 2.0) cuts.push_back(c);
  if (cuts.back() < U) cuts.push_back(U);

  const std::size_t nseg = cuts.size() - 1;
  Options seg = opt;
  seg.abs_tol = opt.abs_tol / static_cast<double>(nseg);
  IntegralResult<T> out;
  detail::Kahan<T> acc;
  for (std::size_t i = 0; i < nseg; ++i) {
    auto r = integrate(f, cuts[i], cuts[i + 1], seg);
    acc.add(r.value);
    out.err += r.err;
    out.evaluations += r.evaluations;
  }
  out.value = acc.total();
  out.err += trunc_floor / decay;
  return out;
}

// Finite-interval oscillatory integrand: pre-split [a,b] into panels of the
// given half-period so each panel sees at most one sign change, then refine
// each panel adaptively.
template <class F>
auto integrate_oscillatory(F&& f, double a, double b, double half_period, const Options& opt) {
  using T = std::decay_t<decltype(f(0.5 * (a + b)))>;
  IntegralResult<T> out;
  if (!(b > a)) return out;
  long n = 1;
  if (half_period > 0.0 && half_period < (b - a)) {
    n = static_cast<long>(std::ceil((b - a) / half_period));
    if (n > 200000) throw std::invalid_argument("integrate_oscillatory: panel count too large");
  }
  Options panel = opt;
  panel.abs_tol = opt.abs_tol / static_cast<double>(n);
  const double w = (b - a) / static_cast<double>(n);
  detail::Kahan<T> acc;
  for (long k = 0; k < n; ++k) {
    const double lo = a + w * static_cast<double>(k);
    const double hi = (k == n - 1) ? b : a + w * static_cast<double>(k + 1);
    auto r = integrate(f, lo, hi, panel);
    acc.add(r.value);
    out.err += r.err;
    out.evaluations += r.evaluations;
  }
  out.value = acc.total();
  return out;
}

}  // namespace fjb::quad
