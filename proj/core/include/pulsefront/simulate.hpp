#pragma once

#include <utility>
#include <vector>

#include "pulsefront/profiles.hpp"

namespace pulsefront {

// Direct explicit integration of u_t = (a_L u_x)_x + mu_L u (1 - u) from
// step initial data; the realized front speed is the end-to-end oracle for
// the variational c*_L.
struct SimConfig {
  ProfilePair profiles;
  double L = 1.0;              // coefficient period
  double domain_length = 50.0;  // >= 50 max(L, 1)
  double dx = 0.05;
  double dt = 0.0;             // must satisfy dt <= 0.45 dx^2 / a_M
  double t_end = 100.0;
  double front_level = 0.5;

  void validate() const;
};

// Snaps dx so the period L falls on the grid, sizes dt at the CFL bound
// (also capped against the reaction scale), and rounds the domain to a
// whole number of cells.
SimConfig make_sim_config(const ProfilePair& profiles, double L,
                          double domain_length, double dx, double t_end);

struct FrontTrace {
  std::vector<double> times;
  std::vector<double> positions;  // level-crossing locations
};

struct SimResult {
  double measured_speed = 0.0;
  double fit_residual = 0.0;     // RMS deviation of the linear fit
  double pulsation_defect = 0.0; // sup_x |u(t + L/c, x + L) - u(t, x)|
};

struct SimOutput {
  FrontTrace trace;
  SimResult result;
  std::vector<double> final_u;  // field at t_end
};

SimOutput run_front(const SimConfig& cfg);

// Least-squares slope over the trailing half of the trace.
std::pair<double, double> measure_speed(const FrontTrace& trace);

}  // namespace pulsefront
