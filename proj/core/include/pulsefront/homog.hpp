#pragma once

#include <vector>

#include "pulsefront/profiles.hpp"

namespace pulsefront {

// Closed-form homogenization analytics at L -> 0+:
//   c_hom      = 2 sqrt(<a>_H <mu>_A)        (limit of c*_L)
//   lambda_hom = sqrt(<mu>_A / <a>_H)        (limit of lambda*_L)
//   gamma      = lim d^2 c*_L / dL^2 >= 0,
// with gamma = 0 exactly when mu/<mu>_A + <a>_H/a == 2.
struct HomogReport {
  double a_H = 0.0;
  double mu_A = 0.0;
  double c_hom = 0.0;
  double lambda_hom = 0.0;
  double gamma = 0.0;
  bool degenerate = false;
};

// Mean-zero growth case: c*_L vanishes at L = 0 and grows at first order,
// with slope 2 sqrt(beta <a>_H) and lambda* slope sqrt(beta / <a>_H).
struct MeanZeroReport {
  double beta = 0.0;
  double slope = 0.0;
  double lambda_slope = 0.0;
};

// gamma = 2 sqrt(<a>_H/<mu>_A) [ int A^2/a - <a>_H (int A/a)^2 ] with
// A(x) = int_0^x mu + <mu>_A <a>_H int_0^x 1/a - 2 <mu>_A x.
// Throws NonPositiveMeanGrowth when <mu>_A <= 0.
HomogReport homogenize(const ProfilePair& profiles, int grid = 4096);

// Same second-moment functional with A(x) = int_0^x mu, for <mu>_A = 0.
MeanZeroReport beta_mean_zero(const ProfilePair& profiles, int grid = 4096);

// First-order eigenfunction correction phi_tilde ~ 1 + L phi_1:
// phi_1' = lambda* (<a>_H / a - 1), normalized by int_0^1 phi_1 = 0.
double phi1_closed_form(const ProfilePair& profiles, double x, int grid = 4096);
std::vector<double> phi1_closed_form(const ProfilePair& profiles,
                                     const std::vector<double>& xs, int grid = 4096);

}  // namespace pulsefront
