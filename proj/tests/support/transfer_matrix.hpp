#pragma once

#include <pulsefront/profiles.hpp>

namespace pulsefront::testing {

// Independent route to the patch dispersion relation. phi'' = (s - mu) phi
// is propagated through the four constant-coefficient segments of the
// L0-cell by 2x2 transfer matrices; the quasi-periodicity condition
// phi(L0) = e^{lambda L0} phi(0) (same for phi') holds iff
//   trace T(s) = 2 cosh(lambda L0)
// since det T = 1. The largest s > m satisfying it is k_z(lambda).
double monodromy_trace(const PatchConfig& cfg, double s);

double oracle_condition(const PatchConfig& cfg, double lambda, double s);

// Largest root of the trace condition in [s_lo, s_hi], downward scan plus
// bisection; mirrors the production bracket so roots are comparable.
double oracle_largest_root(const PatchConfig& cfg, double lambda);

}  // namespace pulsefront::testing
