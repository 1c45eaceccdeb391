#pragma once

#include <utility>
#include <vector>

#include "pulsefront/profiles.hpp"
#include "pulsefront/speed.hpp"

namespace pulsefront {

// Dispersion relation of the two-fragment patch landscape (a == 1, mu two
// valued). k_z(lambda) is the largest real root s > m of F(z, lambda, s) = 0;
// the closed form is equivalent to the periodic eigenproblem exactly in the
// regime k > m.
struct PatchDispersion {
  PatchConfig cfg;
  double lambda = 0.0;
  double k = 0.0;  // largest root, > m
  std::pair<double, double> bracket{0.0, 0.0};
  double f_residual = 0.0;  // |scaled F| at the root
};

struct PatchSpeedResult {
  SpeedResult speed;
  bool regime_warning = false;  // l/L0 <= 3/4: k > m not guaranteed at lambda*
};

struct FragRow {
  double z = 0.0;
  double c_star = 0.0;
  double lambda_star = 0.0;
  double k_at_min = 0.0;
  bool regime_warning = false;
};

struct FragSweepReport {
  std::vector<FragRow> rows;  // z ascending over [0, L0-l]
  bool monotone_decreasing = false;  // strictly, on [0, (L0-l)/2]
  bool monotone_increasing = false;  // strictly, on [(L0-l)/2, L0-l]
  double symmetry_defect = 0.0;      // max |c*(z) - c*(L0-l-z)|
  bool regime_warning = false;
};

// Overflow-safe evaluations: every hyperbolic product is expanded into
// exponentials and the whole sum is divided by the dominant one, so the
// returned value has the sign (and the roots) of F resp. G.
double F_eval(const PatchConfig& cfg, double z_override, double lambda, double s);
double G_eval(const PatchConfig& cfg, double z_override, double s);

// Largest root of F above m, bracketed by [lambda^2 + m l/L0, lambda^2 + m].
PatchDispersion k_patch(const PatchConfig& cfg, double lambda);

// Minimal speed from the dispersion relation; falls back to the grid
// eigensolver on the cell-averaged landscape when no root sits above m.
PatchSpeedResult c_star_patch(const PatchConfig& cfg);

// Uniform z sweep over [0, L0-l]; z_count must be odd and >= 5 so the
// midpoint (L0-l)/2 is sampled.
FragSweepReport frag_sweep(const PatchConfig& cfg_base, int z_count);

}  // namespace pulsefront
