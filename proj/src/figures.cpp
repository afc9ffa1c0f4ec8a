#include "fjb/figures.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "fjb/bounds.hpp"
#include "fjb/dirichlet.hpp"
#include "fjb/fjsums.hpp"
#include "fjb/specfun.hpp"

namespace fjb::figures {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_fig1(std::ostream& os, long n, long points, const EvalOptions& opts) {
  opts.validate();
  if (n < 2) throw std::domain_error("write_fig1 requires n >= 2");
  if (points < 1) throw std::domain_error("write_fig1 requires points >= 1");
  os << "x,S_n,arccot_upper,arccot_lower,fejer1928,turan1952,ak2003,bk1998,"
        "koumandos2012,alkou12\n";
  const double wlo = bounds::bk1998_window_lo(n);
  const double whi = bounds::bk1998_window_hi(n);
  for (long i = 0; i < points; ++i) {
    const double x =
        specfun::kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(points);
    const double sn = fjsums::sine_partial_sum(x, n);
    const double saw = 0.5 * (specfun::kPi - x);
    const double env = bounds::arccot_envelope(static_cast<double>(n), x);
    const bounds::ClassicalBounds b = bounds::classical_bounds(n, x);
    os << num(x) << ',' << num(sn) << ',' << num(saw + env) << ','
       << num(saw - env) << ',' << num(b.fejer1928) << ',' << num(b.turan1952)
       << ',' << num(b.ak2003) << ',';
    if (x >= wlo && x <= whi) os << num(b.bk1998);
    os << ',' << num(b.koumandos2012) << ',' << num(b.alkou12) << '\n';
  }
}

void write_fig2(std::ostream& os, double lambda, long points,
                const EvalOptions& opts) {
  opts.validate();
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("write_fig2 requires lambda > 0");
  }
  if (points < 1) throw std::domain_error("write_fig2 requires points >= 1");
  os << "x,lambda_Cci,lambda_Sci_minus_1,sec_x,neg_sec_x\n";
  for (long i = 0; i < points; ++i) {
    const double x = 0.5 * specfun::kPi * (static_cast<double>(i) + 0.5) /
                     static_cast<double>(points);
    const ComplexValue e = dirichlet::eci({x, lambda}, opts);
    const double sec = 1.0 / std::cos(x);
    os << num(x) << ',' << num(lambda * e.re) << ',' << num(lambda * e.im - 1.0)
       << ',' << num(sec) << ',' << num(-sec) << '\n';
  }
}

}  // namespace fjb::figures
