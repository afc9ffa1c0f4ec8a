#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace fjb {

// Real/imaginary pair used by every public interface; callers that want
// operator overloads can round-trip through std::complex with the helpers.
struct ComplexValue {
  double re = 0.0;
  double im = 0.0;
};

inline double abs(const ComplexValue& v) { return std::hypot(v.re, v.im); }

inline std::complex<double> to_complex(const ComplexValue& v) { return {v.re, v.im}; }

inline ComplexValue from_complex(const std::complex<double>& z) { return {z.real(), z.imag()}; }

// Accuracy controls shared by quadrature-backed evaluations.
struct EvalOptions {
  double abs_tol = 1e-12;           // absolute accuracy target
  int max_subdivisions = 64;        // adaptive bisection depth cap
  double truncation_floor = 1e-18;  // tail cutoff for semi-infinite integrals

  void validate() const {
    if (!(abs_tol > 0.0) || !(truncation_floor > 0.0) || !(truncation_floor < 1.0) ||
        max_subdivisions < 1)
      throw std::invalid_argument(
          "EvalOptions: require abs_tol > 0, 0 < truncation_floor < 1, max_subdivisions >= 1");
  }
};

}  // namespace fjb
