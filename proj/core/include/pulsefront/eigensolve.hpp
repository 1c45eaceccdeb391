#pragma once

#include <optional>
#include <vector>

#include "pulsefront/profiles.hpp"

namespace pulsefront {

// Principal-eigenvalue problem for the linearized front operator, posed on
// the unit cell (resolution independent of L):
//   (a phi')' + 2 L lambda a phi' + L lambda a' phi
//     + L^2 lambda^2 a phi + L^2 mu phi = ktilde phi,  phi 1-periodic > 0,
// with ktilde(lambda, L) = L^2 k(lambda, L).
struct EigenRequest {
  ProfilePair profiles;
  double lambda = 0.0;  // decay rate; any sign (k is even in lambda)
  double L = 1.0;       // period > 0
  int n = 256;          // grid cells, power of two >= 16

  void validate() const;
};

struct EigenOptions {
  // When set, Richardson-estimate the discretization error against the
  // half grid and double n (up to max_n) until it drops below rel_tol.
  bool auto_refine = false;
  int max_n = 2048;
  double rel_tol = 1e-6;
  // Warm start for the eigenvector (size n); accelerates parameter sweeps.
  const std::vector<double>* initial_guess = nullptr;
};

struct EigenResult {
  double k = 0.0;        // principal eigenvalue of the L-cell operator
  double k_tilde = 0.0;  // = L^2 k, eigenvalue of the unit-cell problem
  std::vector<double> phi;  // positive samples at x_i = i/n, int_0^1 phi^2 = 1
  double residual = 0.0;    // sup-norm residual of the unit-cell eigenproblem
  std::optional<double> rho1;  // -k when lambda == 0
  int n = 0;                   // grid actually used
  long iterations = 0;
};

EigenResult principal_eigenvalue(const EigenRequest& req,
                                 const EigenOptions& opts = {});

// Persistence eigenvalue rho_{1,L} = -k(0,L) of the periodic operator
// phi -> -(a_L phi')' - mu_L phi.
double rho1(const ProfilePair& profiles, double L, int n = 256);

}  // namespace pulsefront
