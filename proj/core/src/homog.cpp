#include "pulsefront/homog.hpp"

#include <cmath>

#include "pulsefront/errors.hpp"
#include "pulsefront/quadrature.hpp"

namespace pulsefront {

namespace {

struct CellGrid {
  int n = 0;
  double h = 0.0;
  std::vector<double> x;        // n+1 nodes
  std::vector<double> a, mu;    // node samples (first n)
  std::vector<double> int_mu;   // cumulative integrals at nodes, n+1 values
  std::vector<double> int_inva;
};

CellGrid tabulate(const ProfilePair& p, int n) {
  if (n < 16) throw InvalidRequest("homog quadrature grid too small");
  CellGrid g;
  g.n = n;
  g.h = 1.0 / n;
  g.x.resize(n + 1);
  g.a.resize(n);
  g.mu.resize(n);
  std::vector<double> inva(n);
  for (int i = 0; i <= n; ++i) g.x[i] = i * g.h;
  for (int i = 0; i < n; ++i) {
    g.a[i] = p.a(g.x[i]);
    g.mu[i] = p.mu(g.x[i]);
    inva[i] = 1.0 / g.a[i];
  }
  g.int_mu = periodic_cumulative(g.mu);
  g.int_inva = periodic_cumulative(inva);
  return g;
}

// Rectangle rule over the period; spectrally accurate for smooth periodic
// samples, which all integrands here are up to profile kinks.
double period_integral(const CellGrid& g, const std::vector<double>& f) {
  double s = 0.0;
  for (int i = 0; i < g.n; ++i) s += f[i];
  return s * g.h;
}

struct SecondMoment {
  double value = 0.0;  // int A^2/a - a_H (int A/a)^2
};

SecondMoment a_weighted_variance(const CellGrid& g, const std::vector<double>& A,
                                 double a_H) {
  std::vector<double> A2a(g.n), Aa(g.n);
  for (int i = 0; i < g.n; ++i) {
    A2a[i] = A[i] * A[i] / g.a[i];
    Aa[i] = A[i] / g.a[i];
  }
  const double i1 = period_integral(g, A2a);
  const double i2 = period_integral(g, Aa);
  return {i1 - a_H * i2 * i2};
}

}  // namespace

HomogReport homogenize(const ProfilePair& profiles, int grid) {
  const double mu_A = profiles.mu.arithmetic_mean();
  const double a_H = profiles.a.harmonic_mean();
  if (!(mu_A > 0.0))
    throw NonPositiveMeanGrowth(
        "<mu>_A must be > 0 (use beta_mean_zero for the mean-zero case)");

  CellGrid g = tabulate(profiles, grid);
  std::vector<double> A(g.n);
  for (int i = 0; i < g.n; ++i)
    A[i] = g.int_mu[i] + mu_A * a_H * g.int_inva[i] - 2.0 * mu_A * g.x[i];

  HomogReport rep;
  rep.a_H = a_H;
  rep.mu_A = mu_A;
  rep.c_hom = 2.0 * std::sqrt(a_H * mu_A);
  rep.lambda_hom = std::sqrt(mu_A / a_H);
  rep.gamma = 2.0 * std::sqrt(a_H / mu_A) * a_weighted_variance(g, A, a_H).value;

  double criterion = 0.0;
  for (int i = 0; i < g.n; ++i)
    criterion = std::max(criterion,
                         std::abs(g.mu[i] / mu_A + a_H / g.a[i] - 2.0));
  rep.degenerate = criterion <= 1e-9;
  return rep;
}

MeanZeroReport beta_mean_zero(const ProfilePair& profiles, int grid) {
  const double mu_A = profiles.mu.arithmetic_mean();
  if (std::abs(mu_A) > 1e-12)
    throw NotMeanZero("beta_mean_zero requires <mu>_A = 0 (within 1e-12)");
  if (profiles.mu.min_value() == 0.0 && profiles.mu.max_value() == 0.0)
    throw IdenticallyZeroGrowth("mu must not vanish identically");

  const double a_H = profiles.a.harmonic_mean();
  CellGrid g = tabulate(profiles, grid);
  std::vector<double> A(g.int_mu.begin(), g.int_mu.begin() + g.n);

  MeanZeroReport rep;
  rep.beta = a_weighted_variance(g, A, a_H).value;
  rep.slope = 2.0 * std::sqrt(rep.beta * a_H);
  rep.lambda_slope = std::sqrt(rep.beta / a_H);
  return rep;
}

std::vector<double> phi1_closed_form(const ProfilePair& profiles,
                                     const std::vector<double>& xs, int grid) {
  const double mu_A = profiles.mu.arithmetic_mean();
  const double a_H = profiles.a.harmonic_mean();
  const double lambda_star = std::sqrt(std::max(mu_A, 0.0) / a_H);

  CellGrid g = tabulate(profiles, grid);
  // phi1(x) = lambda* (a_H int_0^x 1/a - x) + C; the additive constant comes
  // from the normalization int_0^1 phi1 = 0, evaluated with the periodic
  // rectangle rule on the (periodic, continuous) bracketed part.
  std::vector<double> base(g.n);
  for (int i = 0; i < g.n; ++i) base[i] = a_H * g.int_inva[i] - g.x[i];
  const double constant = -lambda_star * period_integral(g, base);

  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    double u = x - std::floor(x);
    const double t = u * g.n;
    int i = static_cast<int>(t);
    if (i >= g.n) i = g.n - 1;
    const double frac = t - i;
    const double cum = g.int_inva[i] + frac * (g.int_inva[i + 1] - g.int_inva[i]);
    out.push_back(lambda_star * (a_H * cum - u) + constant);
  }
  return out;
}

double phi1_closed_form(const ProfilePair& profiles, double x, int grid) {
  return phi1_closed_form(profiles, std::vector<double>{x}, grid)[0];
}

}  // namespace pulsefront
