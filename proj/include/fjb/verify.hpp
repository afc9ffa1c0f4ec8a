#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fjb/bounds.hpp"
#include "fjb/types.hpp"

// Certification layer: deterministic grid and random sweeps of every bound
// against independently evaluated quantities, threshold root-finding,
// cross-representation identity residuals, and asymptotic limit tables.

namespace fjb::verify {

enum class Spacing { Linear, Log };

// One sweep axis.  Closed-domain axes sample count points including both
// endpoints; axes whose underlying domain is open are sampled at half-step
// offsets so the singular endpoints are never touched.  A degenerate axis
// (count == 1, lo == hi) pins the coordinate.
struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  long count = 2;
  Spacing spacing = Spacing::Linear;
};

struct GridSpec {
  std::vector<Axis> axes;
};

// Result of a sweep.  samples counts points where the margin was evaluated;
// points outside a bound's pointwise validity window (documented per bound)
// are skipped and not counted.  A sample is a violation when its margin drops
// below -budget, where budget covers evaluation error of both sides.
// near_equality counts samples with |margin| <= budget.
struct InequalityReport {
  bounds::BoundId bound_id = bounds::BoundId::ArccotEnvelope;
  long samples = 0;
  long violations = 0;
  long near_equality = 0;
  double min_margin = 0.0;
  std::array<double, 3> argmin{0.0, 0.0, 0.0};
  double budget = 0.0;
  double elapsed_seconds = 0.0;
};

// Number of axes the given bound's margin function expects, and their
// order/meaning (see README): e.g. ArccotEnvelope takes (x, mu),
// FJTuran takes (x, n), the Taylor bounds take (r, theta, n).
int axis_count(bounds::BoundId id);

// margin = bound - quantity for upper bounds, quantity - bound for lower
// bounds; positive margins certify the inequality at the point.  Coordinates
// beyond axis_count(id) are ignored.  Points outside the bound's pointwise
// validity window return NaN.
double margin_at(bounds::BoundId id, const std::array<double, 3>& coords,
                 const EvalOptions& opts = {});

// Row-major deterministic sweep over the grid.  Throws std::invalid_argument
// for a grid whose shape does not match the bound or whose axes are malformed.
InequalityReport sweep(bounds::BoundId id, const GridSpec& grid,
                       const EvalOptions& opts = {});

// Same report over `count` pseudo-random points drawn from a fixed per-bound
// admissible window; identical (seed, count) pairs reproduce bit-identical
// reports.
InequalityReport sweep_random(bounds::BoundId id, long count, std::uint64_t seed,
                              const EvalOptions& opts = {});

enum class Threshold {
  CrossoverMArccot,  // M(t) = arccot(t)
  CrossoverEArccot,  // |E(t)| = arccot(t)
};

struct ThresholdResult {
  double root = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;
};

// Bisection on [0.1, 1] to width 1e-13 plus one secant polish.
ThresholdResult find_threshold(Threshold which, const EvalOptions& opts = {});

struct IdentityResidual {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Fixed published battery of cross-representation identities (truncation
// shift, sawtooth constancy of the rotated sum, its real-part analogue, the
// half-angle link for the integrated secant, digamma closed form, and both
// finite-difference ODE checks).  Sample points are listed in the README.
std::vector<IdentityResidual> check_identities(const EvalOptions& opts = {});

struct LimitTable {
  std::string name;
  std::array<double, 3> scales{0.0, 0.0, 0.0};
  std::array<double, 3> deviations{0.0, 0.0, 0.0};
  bool decreasing = false;
};

// Scaling-limit deviation tables at scales 10, 100, 1000; each table's
// deviations must decrease strictly.
std::vector<LimitTable> check_limits(const EvalOptions& opts = {});

}  // namespace fjb::verify
