#pragma once

#include "fjb/types.hpp"

// The slowly convergent series L(x,μ) = Σ_{k≥1} e^{ikx}/(k+μ) and its
// relatives: the truncated sum L_n, the odd-normalized variant
// 𝕃(x,λ) = ∫_0^∞ e^{-λu}/sinh(u-ix) du, the alternating transform
// Sπ(λ) = ∫_0^∞ e^{-λu}/cosh u du, and the phase-rotated e^{ixμ}L(x,μ).
// Primary evaluation goes through Laplace-transform quadrature; an
// Abel-accelerated direct summation is kept as an independent second path.

namespace fjb::fjsums {

struct FJArgs {
  double x = 0.0;   // angle, any real off the 2π lattice
  double mu = 0.0;  // shift, > −1
};

struct FJArgsOdd {
  double x = 0.0;       // angle with sin x ≠ 0
  double lambda = 0.0;  // decay parameter, > −1
};

// L(x,μ) by the Laplace representation ∫_0^∞ e^{-μu}/(e^{u-ix}−1) du, with a
// summation path below |sin(x/2)| = 0.01 and a pole-subtracted quadrature
// fallback when the summation cannot meet abs_tol.
ComplexValue L_infinite(const FJArgs& args, const EvalOptions& opts = {});

// Independent evaluation path: direct summation accelerated by repeated
// summation by parts, with a Dirichlet-kernel remainder bound.  err_out, if
// given, receives the achieved error bound (may exceed opts.abs_tol for very
// small |sin(x/2)|).
ComplexValue l_direct_series(const FJArgs& args, const EvalOptions& opts = {},
                             double* err_out = nullptr);

// Σ_{k=1}^n e^{ikx}/(k+μ) reconstructed from two infinite evaluations as
// L(x,μ) − e^{ixn} L(x,μ+n); cross-checks the Laplace path against l_finite_sum.
ComplexValue L_truncated(const FJArgs& args, long n, const EvalOptions& opts = {});

// Exact head Σ_{k=1}^n e^{ikx}/(k+μ), compensated summation.
ComplexValue l_finite_sum(const FJArgs& args, long n);

// Σ_{k=1}^n sin(kx)/k, compensated summation.
double sine_partial_sum(double x, long n);

// 𝕃(x,λ) = e^{-ix} L(2x, (λ−1)/2), evaluated through the sinh-kernel Laplace
// integral; falls back to the cross-normalization identity near sin x = 0.
ComplexValue L_odd(const FJArgsOdd& args, const EvalOptions& opts = {});

// Sπ(λ) = ∫_0^∞ e^{-λu}/cosh u du = 2 Σ_{k≥1} (−1)^{k−1}/(2k−1+λ), λ > −1.
double S_pi(double lambda, const EvalOptions& opts = {});

// e^{ixμ} L(x,μ) evaluated along the shifted contour z = −ix + u.
ComplexValue rotated_L(const FJArgs& args, const EvalOptions& opts = {});

}  // namespace fjb::fjsums
