#include "fjb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>

#include "fjb/dirichlet.hpp"
#include "fjb/fjsums.hpp"
#include "fjb/specfun.hpp"

namespace fjb::verify {

namespace {

using bounds::BoundId;

constexpr double kPi = specfun::kPi;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// A violation requires the margin to undercut zero by more than this budget,
// which covers evaluation error of both the bound and the quantity.
double sweep_budget(const EvalOptions& opts) {
  return std::max(1e-10, 100.0 * opts.abs_tol);
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(rng);
}

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  const double u = unit_uniform(rng);
  const long span = hi - lo + 1;
  long v = lo + static_cast<long>(u * static_cast<double>(span));
  return std::clamp(v, lo, hi);
}

bool near_integer(double v) { return std::floor(v) == v; }

long as_index(double v) { return std::lround(v); }

std::complex<double> cval(const ComplexValue& v) { return {v.re, v.im}; }

// --- quantity evaluators ----------------------------------------------------

// |Im e^{i mu x} L(x, mu)|, with the continuous extension pi/2 at x = 0 and
// the exact finite-sum route when mu is a nonnegative integer.
double sawtooth_deviation(double x, double mu, const EvalOptions& opts) {
  if (x == 0.0) return 0.5 * kPi;
  if (near_integer(mu) && mu >= 0.0 && mu < 9.0e15) {
    const long n = static_cast<long>(mu);
    if (n == 0) return std::abs(0.5 * (kPi - x));
    return std::abs(0.5 * (kPi - x) - fjsums::sine_partial_sum(x, n));
  }
  return std::abs(fjsums::rotated_L({x, mu}, opts).im);
}

double abs_L(double x, double mu, const EvalOptions& opts) {
  return abs(fjsums::L_infinite({x, mu}, opts));
}

// |Eci(x, lambda) - i/lambda|
double eci_deviation(double x, double lambda, const EvalOptions& opts) {
  const ComplexValue e = dirichlet::eci({x, lambda}, opts);
  return std::hypot(e.re, e.im - 1.0 / lambda);
}

struct AxisRule {
  double lo;
  double hi;       // +inf when unbounded above
  bool half_step;  // sample at half-step offsets (open underlying domain)
};

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<AxisRule> axis_rules(BoundId id) {
  switch (id) {
    case BoundId::ArccotEnvelope:
      return {{0.0, kPi, false}, {-0.5, kInf, false}};
    case BoundId::MEnvelope:
    case BoundId::LogEnvelope:
    case BoundId::FracEnvelope:
      return {{0.0, kPi, true}, {-0.5, kInf, false}};
    case BoundId::SecEnvelope:
      return {{0.0, 0.5 * kPi, true}, {-kInf, kInf, false}};
    case BoundId::EbycosRhs:
      return {{0.0, 0.5 * kPi, true}, {0.0, kInf, false}};
    case BoundId::FJTuran:
    case BoundId::Fejer1928:
    case BoundId::Turan1952:
    case BoundId::AK2003:
    case BoundId::BK1998:
    case BoundId::Koumandos2012:
    case BoundId::AlKou12:
    case BoundId::AKEvenUpper:
      return {{0.0, kPi, true}, {1.0, kInf, false}};
    case BoundId::TaylorSimple:
    case BoundId::TaylorMp:
    case BoundId::TaylorLog1z:
    case BoundId::TaylorMhat:
      return {{0.0, 1.0, false}, {0.0, 2.0 * kPi, true}, {1.0, kInf, false}};
  }
  throw std::invalid_argument("unknown bound id");
}

}  // namespace

int axis_count(BoundId id) { return static_cast<int>(axis_rules(id).size()); }

double margin_at(BoundId id, const std::array<double, 3>& coords,
                 const EvalOptions& opts) {
  opts.validate();
  const double c0 = coords[0];
  const double c1 = coords[1];
  switch (id) {
    case BoundId::ArccotEnvelope: {
      if (!(c0 >= 0.0 && c0 <= kPi && c1 >= -0.5)) return kNan;
      return bounds::arccot_envelope(c1, c0) - sawtooth_deviation(c0, c1, opts);
    }
    case BoundId::MEnvelope: {
      if (!(c0 > 0.0 && c0 < kPi && c1 > -0.5)) return kNan;
      return bounds::m_envelope(c1, c0, opts) - abs_L(c0, c1, opts);
    }
    case BoundId::LogEnvelope: {
      if (!(c0 > 0.0 && c0 < kPi && c1 > -0.5)) return kNan;
      const double a = (2.0 * c1 + 1.0) * std::sin(0.5 * c0);
      if (!(a > 0.0 && a < 1.0)) return kNan;
      return bounds::log_envelope(c1, c0) - abs_L(c0, c1, opts);
    }
    case BoundId::FracEnvelope: {
      if (!(c0 > 0.0 && c0 < kPi && c1 > -0.5)) return kNan;
      return bounds::frac_envelope(c1, c0) - abs_L(c0, c1, opts);
    }
    case BoundId::SecEnvelope: {
      if (!(c0 > 0.0 && c0 < 0.5 * kPi) || c1 == 0.0 || !std::isfinite(c1)) return kNan;
      return bounds::sec_envelope(c1, c0) - eci_deviation(c0, c1, opts);
    }
    case BoundId::EbycosRhs: {
      if (!(c0 > 0.0 && c0 < 0.5 * kPi && c1 > 0.0) || !std::isfinite(c1)) return kNan;
      return bounds::ebycos_rhs(c1, c0, opts) - eci_deviation(c0, c1, opts);
    }
    case BoundId::FJTuran:
    case BoundId::Fejer1928:
    case BoundId::Turan1952:
    case BoundId::AK2003:
    case BoundId::BK1998:
    case BoundId::Koumandos2012:
    case BoundId::AlKou12:
    case BoundId::AKEvenUpper: {
      if (!(c0 > 0.0 && c0 < kPi)) return kNan;
      const long n = as_index(c1);
      if (n < 1) return kNan;
      if ((id == BoundId::Turan1952 || id == BoundId::AK2003) && n < 2) return kNan;
      if (id == BoundId::AKEvenUpper && (n < 2 || n % 2 != 0)) return kNan;
      if (id == BoundId::BK1998 &&
          !(c0 >= bounds::bk1998_window_lo(n) && c0 <= bounds::bk1998_window_hi(n))) {
        return kNan;
      }
      const double sn = fjsums::sine_partial_sum(c0, n);
      const bounds::ClassicalBounds b = bounds::classical_bounds(n, c0);
      switch (id) {
        case BoundId::FJTuran:
          return b.fj_turan - std::abs(sn - b.fj_turan);
        case BoundId::Fejer1928:
          return sn - b.fejer1928;
        case BoundId::Turan1952:
          return sn - b.turan1952;
        case BoundId::AK2003:
          return sn - b.ak2003;
        case BoundId::BK1998:
          return sn - b.bk1998;
        case BoundId::Koumandos2012:
          return sn - b.koumandos2012;
        case BoundId::AlKou12:
          return sn - b.alkou12;
        default:
          return b.ak_even_upper - sn;
      }
    }
    case BoundId::TaylorSimple:
    case BoundId::TaylorMp:
    case BoundId::TaylorLog1z:
    case BoundId::TaylorMhat: {
      const double r = c0;
      const double theta = c1;
      const long n = as_index(coords[2]);
      if (!(r >= 0.0 && r <= 1.0 + 1e-12) || n < 1) return kNan;
      bounds::TaylorPoint pt{r * std::cos(theta), r * std::sin(theta), n};
      if (std::hypot(1.0 - pt.z_re, pt.z_im) <= 1e-15) return kNan;
      const bounds::TaylorBounds tb = bounds::taylor_bounds(pt);
      std::optional<double> bound;
      if (id == BoundId::TaylorSimple) bound = tb.simple;
      if (id == BoundId::TaylorMp) bound = tb.mp;
      if (id == BoundId::TaylorLog1z) bound = tb.log1z;
      if (id == BoundId::TaylorMhat) bound = tb.mhat;
      if (!bound) return kNan;
      return *bound - abs(bounds::taylor_remainder(pt));
    }
  }
  throw std::invalid_argument("unknown bound id");
}

namespace {

std::vector<double> axis_points(const Axis& ax, const AxisRule& rule) {
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(ax.count));
  if (ax.count == 1) {
    pts.push_back(ax.lo);
    return pts;
  }
  const bool logsp = ax.spacing == Spacing::Log;
  const double a = logsp ? std::log(ax.lo) : ax.lo;
  const double b = logsp ? std::log(ax.hi) : ax.hi;
  for (long i = 0; i < ax.count; ++i) {
    double t;
    if (rule.half_step) {
      t = a + (b - a) * (static_cast<double>(i) + 0.5) / static_cast<double>(ax.count);
    } else {
      t = a + (b - a) * static_cast<double>(i) / static_cast<double>(ax.count - 1);
    }
    pts.push_back(logsp ? std::exp(t) : t);
  }
  return pts;
}

void validate_grid(BoundId id, const GridSpec& grid,
                   const std::vector<AxisRule>& rules) {
  if (grid.axes.size() != rules.size()) {
    throw std::invalid_argument(std::string("bound ") + bounds::to_string(id) +
                                " expects " + std::to_string(rules.size()) +
                                " axes");
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Axis& ax = grid.axes[i];
    if (!std::isfinite(ax.lo) || !std::isfinite(ax.hi)) {
      throw std::invalid_argument("axis endpoints must be finite");
    }
    if (ax.count < 1) throw std::invalid_argument("axis count must be >= 1");
    if (ax.count == 1) {
      if (ax.lo != ax.hi) {
        throw std::invalid_argument("degenerate axis requires lo == hi");
      }
    } else if (!(ax.lo < ax.hi)) {
      throw std::invalid_argument("axis requires lo < hi");
    }
    if (ax.spacing == Spacing::Log && !(ax.lo > 0.0)) {
      throw std::invalid_argument("log axis requires lo > 0");
    }
    const double slack = 1e-12;
    if (ax.lo < rules[i].lo - slack || ax.hi > rules[i].hi + slack) {
      throw std::invalid_argument(std::string("axis ") + std::to_string(i) +
                                  " outside the domain of " +
                                  bounds::to_string(id));
    }
  }
}

struct Accumulator {
  long samples = 0;
  long violations = 0;
  long near_equality = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  std::array<double, 3> argmin{0.0, 0.0, 0.0};
  double budget = 0.0;

  void feed(double margin, const std::array<double, 3>& coords) {
    if (std::isnan(margin)) return;
    ++samples;
    if (margin < -budget) ++violations;
    if (std::abs(margin) <= budget) ++near_equality;
    if (margin < min_margin) {
      min_margin = margin;
      argmin = coords;
    }
  }

  InequalityReport finish(BoundId id, double elapsed) const {
    InequalityReport rep;
    rep.bound_id = id;
    rep.samples = samples;
    rep.violations = violations;
    rep.near_equality = near_equality;
    rep.min_margin = samples > 0 ? min_margin : 0.0;
    rep.argmin = argmin;
    rep.budget = budget;
    rep.elapsed_seconds = elapsed;
    return rep;
  }
};

}  // namespace

InequalityReport sweep(BoundId id, const GridSpec& grid, const EvalOptions& opts) {
  opts.validate();
  const auto rules = axis_rules(id);
  validate_grid(id, grid, rules);
  std::vector<std::vector<double>> pts;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    pts.push_back(axis_points(grid.axes[i], rules[i]));
  }
  while (pts.size() < 3) pts.push_back({0.0});

  const auto t0 = std::chrono::steady_clock::now();
  Accumulator acc;
  acc.budget = sweep_budget(opts);
  for (double v0 : pts[0]) {
    for (double v1 : pts[1]) {
      for (double v2 : pts[2]) {
        const std::array<double, 3> coords{v0, v1, v2};
        acc.feed(margin_at(id, coords, opts), coords);
      }
    }
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return acc.finish(id, dt.count());
}

InequalityReport sweep_random(BoundId id, long count, std::uint64_t seed,
                              const EvalOptions& opts) {
  opts.validate();
  if (count < 1) throw std::invalid_argument("sweep_random requires count >= 1");
  std::mt19937_64 rng(seed);
  const auto t0 = std::chrono::steady_clock::now();
  Accumulator acc;
  acc.budget = sweep_budget(opts);
  for (long i = 0; i < count; ++i) {
    std::array<double, 3> c{0.0, 0.0, 0.0};
    switch (id) {
      case BoundId::ArccotEnvelope:
        c[0] = uniform_in(rng, 0.01, kPi - 0.01);
        c[1] = uniform_in(rng, -0.5, 30.0);
        break;
      case BoundId::MEnvelope:
      case BoundId::FracEnvelope:
        c[0] = uniform_in(rng, 0.05, kPi - 0.05);
        c[1] = uniform_in(rng, -0.45, 20.0);
        break;
      case BoundId::LogEnvelope:
        c[0] = uniform_in(rng, 0.01, kPi - 0.01);
        c[1] = uniform_in(rng, -0.45, 5.0);
        break;
      case BoundId::SecEnvelope:
      case BoundId::EbycosRhs:
        c[0] = uniform_in(rng, 0.01, 0.5 * kPi - 0.01);
        c[1] = uniform_in(rng, 0.2, 50.0);
        break;
      case BoundId::FJTuran:
      case BoundId::Fejer1928:
      case BoundId::Koumandos2012:
      case BoundId::AlKou12:
        c[0] = uniform_in(rng, 0.005, kPi - 0.005);
        c[1] = static_cast<double>(uniform_int(rng, 1, 100));
        break;
      case BoundId::Turan1952:
      case BoundId::AK2003:
        c[0] = uniform_in(rng, 0.005, kPi - 0.005);
        c[1] = static_cast<double>(uniform_int(rng, 2, 100));
        break;
      case BoundId::BK1998: {
        const long n = uniform_int(rng, 3, 100);
        c[0] = uniform_in(rng, bounds::bk1998_window_lo(n), bounds::bk1998_window_hi(n));
        c[1] = static_cast<double>(n);
        break;
      }
      case BoundId::AKEvenUpper:
        c[0] = uniform_in(rng, 0.005, kPi - 0.005);
        c[1] = static_cast<double>(2 * uniform_int(rng, 1, 50));
        break;
      case BoundId::TaylorSimple:
      case BoundId::TaylorMhat:
        c[0] = uniform_in(rng, 0.0, 1.0);
        c[1] = uniform_in(rng, 0.05, 2.0 * kPi - 0.05);
        c[2] = static_cast<double>(uniform_int(rng, 1, 60));
        break;
      case BoundId::TaylorMp:
      case BoundId::TaylorLog1z:
        c[0] = uniform_in(rng, 0.0, 0.999);
        c[1] = uniform_in(rng, 0.05, 2.0 * kPi - 0.05);
        c[2] = static_cast<double>(uniform_int(rng, 1, 60));
        break;
    }
    acc.feed(margin_at(id, c, opts), c);
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return acc.finish(id, dt.count());
}

ThresholdResult find_threshold(Threshold which, const EvalOptions& opts) {
  opts.validate();
  EvalOptions tight = opts;
  tight.abs_tol = std::min(opts.abs_tol, 1e-13);
  const auto f = [&](double t) {
    const double env = specfun::arccot(t);
    if (which == Threshold::CrossoverMArccot) {
      return specfun::comparison_M(t, tight) - env;
    }
    return abs(specfun::exp_integral_E(t, tight)) - env;
  };
  double a = 0.1;
  double b = 1.0;
  double fa = f(a);
  double fb = f(b);
  if (!(fa > 0.0 && fb < 0.0)) {
    throw std::runtime_error("threshold bracket does not change sign");
  }
  while (b - a > 1e-13) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) {
      a = b = mid;
      fa = fb = 0.0;
      break;
    }
    if (fm > 0.0) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }
  double root = 0.5 * (a + b);
  if (fb != fa) {
    const double secant = a - fa * (b - a) / (fb - fa);
    if (secant > 0.1 && secant < 1.0) root = secant;
  }
  return {root, 0.1, 1.0, f(root)};
}

namespace {

void push(std::vector<IdentityResidual>& out, std::string name, double residual,
          double tol) {
  out.push_back({std::move(name), residual, tol, residual <= tol});
}

}  // namespace

std::vector<IdentityResidual> check_identities(const EvalOptions& opts) {
  opts.validate();
  std::vector<IdentityResidual> out;
  const std::complex<double> iu(0.0, 1.0);

  {  // Truncated tail = full tail minus shifted-and-rotated full tail.
    const struct {
      double x, mu;
      long n;
    } pts[] = {{1.0, 0.0, 10}, {2.5, 0.5, 25}, {0.1, 3.0, 100}};
    for (const auto& p : pts) {
      const auto lhs = cval(fjsums::L_truncated({p.x, p.mu}, p.n, opts));
      const auto rhs = cval(fjsums::l_finite_sum({p.x, p.mu}, p.n));
      push(out,
           "truncation-shift x=" + std::to_string(p.x) +
               " mu=" + std::to_string(p.mu) + " n=" + std::to_string(p.n),
           std::abs(lhs - rhs), 1e-10);
    }
  }

  {  // Rotated-sum imaginary part equals pi/2 minus the kernel integral.
    for (double mu : {0.5, 3.0}) {
      double worst = 0.0;
      for (int j = 0; j < 50; ++j) {
        const double x = (j + 0.5) * kPi / 50.0;
        const double lhs = fjsums::rotated_L({x, mu}, opts).im;
        const double rhs = dirichlet::series_remainder_via_kernel(x, mu, opts);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
      push(out, "sawtooth-constancy mu=" + std::to_string(mu), worst, 1e-9);
    }
  }

  {  // Real-part analogue: constant equals -S_pi(2mu+1) cos(pi mu).
    const double mu = 1.3;
    const double cst = -fjsums::S_pi(2.0 * mu + 1.0, opts) * std::cos(kPi * mu);
    for (double x : {0.5, 1.5, 2.5}) {
      const double lhs = fjsums::rotated_L({x, mu}, opts).re -
                         dirichlet::cos_kernel_integral(x, kPi, mu, opts);
      push(out, "cosine-constancy mu=1.3 x=" + std::to_string(x),
           std::abs(lhs - cst), 1e-9);
    }
  }

  {  // Integrated secant via the half-angle shift of the odd-order transform.
    const struct {
      double x, lambda;
    } pts[] = {{0.5, 3.0}, {1.2, 8.0}};
    for (const auto& p : pts) {
      const auto lhs = cval(dirichlet::eci({p.x, p.lambda}, opts));
      const auto rhs =
          std::polar(1.0, p.lambda * p.x) *
              cval(fjsums::L_odd({p.x - 0.5 * kPi, p.lambda}, opts)) +
          iu * fjsums::S_pi(p.lambda, opts);
      push(out,
           "secant-halfangle x=" + std::to_string(p.x) +
               " lambda=" + std::to_string(p.lambda),
           std::abs(lhs - rhs), 1e-9);
    }
  }

  {  // S_pi against the digamma closed form.
    for (double lam : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      const double lhs = fjsums::S_pi(lam, opts);
      const double rhs = 0.5 * (specfun::digamma(0.25 * (lam + 3.0)) -
                                specfun::digamma(0.25 * (lam + 1.0)));
      push(out, "spi-digamma lambda=" + std::to_string(lam), std::abs(lhs - rhs),
           1e-10);
    }
  }

  {  // E'(t) + i E(t) + 1/t = 0 by central differences.
    EvalOptions tight = opts;
    tight.abs_tol = std::min(opts.abs_tol, 1e-13);
    for (double t : {0.5, 2.0, 10.0}) {
      const double h = std::max(1e-4, 1e-3 * t);
      const auto ep = cval(specfun::exp_integral_E(t + h, tight));
      const auto em = cval(specfun::exp_integral_E(t - h, tight));
      const auto e0 = cval(specfun::exp_integral_E(t, tight));
      const auto res = (ep - em) / (2.0 * h) + iu * e0 + 1.0 / t;
      push(out, "e-ode t=" + std::to_string(t), std::abs(res), 1e-5);
    }
  }

  {  // d/dx Lodd(x, lambda) + i lambda Lodd + 1/sin x = 0 by central differences.
    EvalOptions tight = opts;
    tight.abs_tol = std::min(opts.abs_tol, 1e-13);
    const double x = 0.8;
    const double lam = 3.0;
    const double h = 1e-4;
    const auto lp = cval(fjsums::L_odd({x + h, lam}, tight));
    const auto lm = cval(fjsums::L_odd({x - h, lam}, tight));
    const auto l0 = cval(fjsums::L_odd({x, lam}, tight));
    const auto res = (lp - lm) / (2.0 * h) + iu * lam * l0 + 1.0 / std::sin(x);
    push(out, "lodd-ode x=0.8 lambda=3", std::abs(res), 1e-5);
  }

  return out;
}

std::vector<LimitTable> check_limits(const EvalOptions& opts) {
  opts.validate();
  std::vector<LimitTable> out;
  const std::array<double, 3> scales{10.0, 100.0, 1000.0};

  {  // L(nu/mu, mu) -> E(nu) as mu grows, at nu = 1.
    LimitTable t;
    t.name = "sum-to-exponential nu=1";
    t.scales = scales;
    const auto ref = cval(specfun::exp_integral_E(1.0, opts));
    for (int i = 0; i < 3; ++i) {
      const double mu = scales[i];
      t.deviations[i] =
          std::abs(cval(fjsums::L_infinite({1.0 / mu, mu}, opts)) - ref);
    }
    t.decreasing = t.deviations[0] > t.deviations[1] && t.deviations[1] > t.deviations[2];
    out.push_back(std::move(t));
  }

  {  // Ssi(nu/lambda, lambda) -> Si(nu) as lambda grows, at nu = 2.
    LimitTable t;
    t.name = "kernel-to-sinc nu=2";
    t.scales = scales;
    const double ref = specfun::sine_integral(2.0, opts);
    for (int i = 0; i < 3; ++i) {
      const double lam = scales[i];
      t.deviations[i] = std::abs(dirichlet::ssi({2.0 / lam, lam}, opts) - ref);
    }
    t.decreasing = t.deviations[0] > t.deviations[1] && t.deviations[1] > t.deviations[2];
    out.push_back(std::move(t));
  }

  {  // lambda Eci(nu/lambda, lambda) -> i (1 - e^{i nu}) at nu = 1.
    LimitTable t;
    t.name = "secant-rotation nu=1";
    t.scales = scales;
    const std::complex<double> iu(0.0, 1.0);
    const auto ref = iu * (1.0 - std::polar(1.0, 1.0));
    for (int i = 0; i < 3; ++i) {
      const double lam = scales[i];
      t.deviations[i] =
          std::abs(lam * cval(dirichlet::eci({1.0 / lam, lam}, opts)) - ref);
    }
    t.decreasing = t.deviations[0] > t.deviations[1] && t.deviations[1] > t.deviations[2];
    out.push_back(std::move(t));
  }

  return out;
}

}  // namespace fjb::verify
