#include "dense_oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace pulsefront::testing {

double dense_principal_eigenvalue(const ProfilePair& profiles, double lambda,
                                  double L, int n) {
  const double h = 1.0 / n;
  const bool a_pw = profiles.a.kind() == ProfileKind::PiecewiseConstant;
  const bool mu_avg = profiles.mu.kind() == ProfileKind::PiecewiseConstant ||
                      profiles.mu.kind() == ProfileKind::Grid;

  std::vector<double> a(n), mu(n), ah(n);
  for (int i = 0; i < n; ++i) {
    const double x = i * h;
    a[i] = a_pw ? profiles.a.mean_on(x - 0.5 * h, x + 0.5 * h) : profiles.a(x);
    mu[i] = mu_avg ? profiles.mu.mean_on(x - 0.5 * h, x + 0.5 * h) : profiles.mu(x);
    ah[i] = a_pw ? profiles.a.harmonic_mean_on(x, x + h) : profiles.a(x + 0.5 * h);
  }

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  const double inv_h2 = 1.0 / (h * h);
  const double conv = L * lambda / (2.0 * h);
  for (int i = 0; i < n; ++i) {
    const int im = (i + n - 1) % n;
    const int ip = (i + 1) % n;
    M(i, im) += ah[im] * inv_h2 - conv * (a[im] + a[i]);
    M(i, ip) += ah[i] * inv_h2 + conv * (a[ip] + a[i]);
    M(i, i) += -(ah[i] + ah[im]) * inv_h2 + L * L * lambda * lambda * a[i] +
               L * L * mu[i];
  }

  Eigen::EigenSolver<Eigen::MatrixXd> solver(M);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense eigendecomposition failed");

  double best = 0.0;
  bool found = false;
  for (int j = 0; j < n; ++j) {
    if (std::abs(solver.eigenvalues()[j].imag()) > 1e-8 * (1.0 + inv_h2)) continue;
    Eigen::VectorXcd vec = solver.eigenvectors().col(j);
    // One-signed real eigenvector (up to rounding noise and global phase).
    int arg_max = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(vec[i]) > std::abs(vec[arg_max])) arg_max = i;
    const std::complex<double> phase = vec[arg_max] / std::abs(vec[arg_max]);
    bool positive = true;
    for (int i = 0; i < n && positive; ++i) {
      const std::complex<double> w = vec[i] / phase;
      positive = w.real() > -1e-9 * std::abs(vec[arg_max]) &&
                 std::abs(w.imag()) < 1e-7 * std::abs(vec[arg_max]);
    }
    if (!positive) continue;
    const double value = solver.eigenvalues()[j].real();
    if (!found || value > best) best = value;
    found = true;
  }
  if (!found) throw std::runtime_error("no positive eigenvector in dense spectrum");
  return best / (L * L);
}

}  // namespace pulsefront::testing
