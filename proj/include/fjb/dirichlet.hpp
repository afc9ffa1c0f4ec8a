#pragma once

#include "fjb/types.hpp"

// The Dirichlet kernel with continuous frequency, and the integrated kernels
//   Ssi(x,λ) = ∫_0^x sin(λt)/sin t dt        (0 < x < π)
//   Eci(x,λ) = ∫_0^x e^{iλt}/cos t dt        (0 < x < π/2), Cci = Re, Sci = Im
// together with the half-angle kernel integrals that tie the partial sums of
// the trigonometric series to x-independent constants.

namespace fjb::dirichlet {

struct KernelArgs {
  double x = 0.0;       // upper integration limit, radians
  double lambda = 0.0;  // continuous frequency (plays the role of 2n+1)
};

// sin((n+1/2)x)/sin(x/2) with the limit value 2n+1 where sin(x/2) = 0.
double dirichlet_kernel(double x, int n);

// ∫_0^x sin(λt)/sin t dt, 0 < x < π; integrand takes its limit λ at t = 0.
double ssi(const KernelArgs& args, const EvalOptions& opts = {});

// ∫_0^x e^{iλt}/cos t dt by direct (oscillatory-panel) quadrature, 0 < x < π/2.
ComplexValue eci(const KernelArgs& args, const EvalOptions& opts = {});

// Same function through its Laplace representation
//   i ∫_0^∞ e^{-λu} (1/cosh u − e^{iλx}/cosh(u − ix)) du,  λ > −1.
ComplexValue eci_laplace(const KernelArgs& args, const EvalOptions& opts = {});

// Im and Re parts of eci (direct path).
double sci(const KernelArgs& args, const EvalOptions& opts = {});
double cci(const KernelArgs& args, const EvalOptions& opts = {});

// Im(e^{ixμ}L(x,μ)) recovered from the half-angle kernel:
//   π/2 − ∫_0^x sin((μ+1/2)y)/(2 sin(y/2)) dy,  0 < x < π, μ > −1.
double series_remainder_via_kernel(double x, double mu, const EvalOptions& opts = {});

// ∫_lo^hi cos((μ+1/2)y)/(2 sin(y/2)) dy for 0 < lo ≤ hi ≤ π.
double cos_kernel_integral(double lo, double hi, double mu, const EvalOptions& opts = {});

}  // namespace fjb::dirichlet
