#include "pulsefront/speed.hpp"

#include <cmath>

#include "pulsefront/eigensolve.hpp"
#include "pulsefront/errors.hpp"
#include "pulsefront/minimize.hpp"

namespace pulsefront {

namespace {

// q(lambda) = k(lambda, L)/lambda with warm-started eigensolves.
class SpeedObjective {
public:
  SpeedObjective(const ProfilePair& profiles, double L, int n)
      : profiles_(profiles), L_(L), n_(n) {}

  double operator()(double lambda) {
    EigenRequest req{profiles_, lambda, L_, n_};
    EigenOptions opts;
    if (!phi_.empty()) opts.initial_guess = &phi_;
    EigenResult res = principal_eigenvalue(req, opts);
    phi_ = std::move(res.phi);
    last_k_ = res.k;
    return res.k / lambda;
  }

  double k(double lambda) {
    (*this)(lambda);
    return last_k_;
  }

private:
  const ProfilePair& profiles_;
  double L_;
  int n_;
  std::vector<double> phi_;
  double last_k_ = 0.0;
};

}  // namespace

SpeedResult minimal_speed(const ProfilePair& profiles, double L, int n) {
  if (!(L > 0.0) || !std::isfinite(L)) throw InvalidRequest("L must be > 0");
  SpeedObjective q(profiles, L, n);
  MinimizeOutcome mo = minimize_unimodal([&](double lam) { return q(lam); });

  SpeedResult out;
  out.lambda_star = mo.lambda_star;
  out.k_at_min = q.k(mo.lambda_star);
  out.c_star = out.k_at_min / out.lambda_star;
  out.L = L;
  out.bracket = mo.bracket;
  out.evals = mo.evals + 1;
  return out;
}

namespace {

// Interpolating quadratic through (L1,c1),(L2,c2),(L3,c3), evaluated at 0.
void quadratic_derivatives_at_zero(double L1, double c1, double L2, double c2,
                                   double L3, double c3, double& c0, double& d1,
                                   double& d2) {
  const double f01 = (c2 - c1) / (L2 - L1);
  const double f12 = (c3 - c2) / (L3 - L2);
  const double f012 = (f12 - f01) / (L3 - L1);
  c0 = c1 - f01 * L1 + f012 * L1 * L2;
  d1 = f01 - f012 * (L1 + L2);
  d2 = 2.0 * f012;
}

}  // namespace

SweepReport sweep_L(const ProfilePair& profiles, const std::vector<double>& L_values,
                    int n) {
  if (L_values.size() < 3)
    throw InvalidRequest("sweep_L needs at least three L values");
  for (std::size_t i = 0; i < L_values.size(); ++i) {
    if (!(L_values[i] > 0.0)) throw InvalidRequest("all L must be > 0");
    if (i > 0 && L_values[i] <= L_values[i - 1])
      throw InvalidRequest("L values must be strictly increasing");
  }

  SweepReport report;
  report.rows.reserve(L_values.size());
  for (double L : L_values) {
    SpeedResult r = minimal_speed(profiles, L, n);
    report.rows.push_back({L, r.c_star, r.lambda_star, r.k_at_min, n});
  }
  quadratic_derivatives_at_zero(
      report.rows[0].L, report.rows[0].c_star, report.rows[1].L,
      report.rows[1].c_star, report.rows[2].L, report.rows[2].c_star,
      report.c_at_zero, report.d1, report.d2);
  return report;
}

std::vector<LambdaStarRow> lambda_star_limit_check(
    const ProfilePair& profiles, const std::vector<double>& L_values, int n) {
  const double mu_A = profiles.mu.arithmetic_mean();
  const double a_H = profiles.a.harmonic_mean();
  if (!(mu_A > 0.0))
    throw NonPositiveMeanGrowth("lambda* limit formula needs <mu>_A > 0");
  const double limit = std::sqrt(mu_A / a_H);

  std::vector<LambdaStarRow> rows;
  rows.reserve(L_values.size());
  for (double L : L_values) {
    SpeedResult r = minimal_speed(profiles, L, n);
    rows.push_back({L, r.lambda_star, limit, r.lambda_star - limit});
  }
  return rows;
}

}  // namespace pulsefront
