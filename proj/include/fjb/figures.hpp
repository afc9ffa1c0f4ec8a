#pragma once

#include <ostream>

#include "fjb/types.hpp"

// Deterministic CSV emitters for the two reference plots: the sine partial
// sum with its envelope and classical minorants, and the scaled integrated
// secant components against the secant envelope.

namespace fjb::figures {

// Columns: x,S_n,arccot_upper,arccot_lower,fejer1928,turan1952,ak2003,
// bk1998,koumandos2012,alkou12.  Half-step grid of `points` samples on
// (0, pi); bk1998 is left empty outside its interior window.
void write_fig1(std::ostream& os, long n = 10, long points = 400,
                const EvalOptions& opts = {});

// Columns: x,lambda_Cci,lambda_Sci_minus_1,sec_x,neg_sec_x.  Half-step grid
// of `points` samples on (0, pi/2).
void write_fig2(std::ostream& os, double lambda = 12.0, long points = 400,
                const EvalOptions& opts = {});

}  // namespace fjb::figures
