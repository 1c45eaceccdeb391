#pragma once

#include <utility>
#include <vector>

#include "pulsefront/profiles.hpp"

namespace pulsefront {

// Minimal pulsating-front speed c*_L = min_{lambda>0} k(lambda, L) / lambda.
struct SpeedResult {
  double c_star = 0.0;
  double lambda_star = 0.0;
  double k_at_min = 0.0;  // c_star == k_at_min / lambda_star as computed
  double L = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  long evals = 0;  // eigenvalue solves spent
};

struct SweepRow {
  double L = 0.0;
  double c_star = 0.0;
  double lambda_star = 0.0;
  double k_at_min = 0.0;
  int n_grid = 0;
};

// One row per L plus finite-difference estimates of c*, dc*/dL and
// d^2c*/dL^2 at L -> 0, from the quadratic through the three smallest L
// values (equivalent to Richardson-corrected one-sided differences on a
// geometric grid with ratio 2).
struct SweepReport {
  std::vector<SweepRow> rows;
  double c_at_zero = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

struct LambdaStarRow {
  double L = 0.0;
  double lambda_star = 0.0;
  double lambda_limit = 0.0;  // sqrt(<mu>_A / <a>_H)
  double gap = 0.0;
};

SpeedResult minimal_speed(const ProfilePair& profiles, double L, int n = 256);

SweepReport sweep_L(const ProfilePair& profiles, const std::vector<double>& L_values,
                    int n = 256);

std::vector<LambdaStarRow> lambda_star_limit_check(const ProfilePair& profiles,
                                                   const std::vector<double>& L_values,
                                                   int n = 256);

}  // namespace pulsefront
