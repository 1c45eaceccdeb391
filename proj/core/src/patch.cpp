#include "pulsefront/patch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pulsefront/eigensolve.hpp"
#include "pulsefront/errors.hpp"
#include "pulsefront/minimize.hpp"

namespace pulsefront {

namespace {

// Sum of c_j * exp(e_j), evaluated as exp(E) * sum c_j exp(e_j - E) with
// E = max e_j. The scale factor exp(E) is strictly positive, so the scaled
// value keeps the sign and the roots of the plain sum while never
// overflowing, no matter how large lambda L0 grows.
class ExpSum {
public:
  void add(double coef, double expo) { terms_.push_back({coef, expo}); }

  void add_sinh(double c, double x) {
    add(0.5 * c, x);
    add(-0.5 * c, -x);
  }
  void add_cosh(double c, double x) {
    add(0.5 * c, x);
    add(0.5 * c, -x);
  }
  // c * cosh(x) cosh(y)
  void add_cosh_cosh(double c, double x, double y) {
    add(0.25 * c, x + y);
    add(0.25 * c, x - y);
    add(0.25 * c, -x + y);
    add(0.25 * c, -x - y);
  }
  // c * sinh(x) sinh(y)
  void add_sinh_sinh(double c, double x, double y) {
    add(0.25 * c, x + y);
    add(-0.25 * c, x - y);
    add(-0.25 * c, -x + y);
    add(0.25 * c, -x - y);
  }
  // c * sinh(x) cosh(y)
  void add_sinh_cosh(double c, double x, double y) {
    add(0.25 * c, x + y);
    add(0.25 * c, x - y);
    add(-0.25 * c, -x + y);
    add(-0.25 * c, -x - y);
  }

  double eval_scaled() const {
    double emax = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms_)
      if (t.coef != 0.0) emax = std::max(emax, t.expo);
    if (!std::isfinite(emax)) return 0.0;
    double sum = 0.0;
    for (const auto& t : terms_) sum += t.coef * std::exp(t.expo - emax);
    return sum;
  }

private:
  struct Term {
    double coef, expo;
  };
  std::vector<Term> terms_;
};

}  // namespace

double F_eval(const PatchConfig& cfg, double z, double lambda, double s) {
  cfg.validate();
  const double m = cfg.m;
  if (s < m) throw DomainError("F is defined for s >= m");
  if (z < 0.0 || z > cfg.L0 - cfg.l + 1e-12 * cfg.L0)
    throw InvalidPatchGeometry("z must lie in [0, L0 - l]");

  const double alpha = cfg.L0 - cfg.l;
  const double beta = cfg.L0 - cfg.l - 2.0 * z;
  const double rs = std::sqrt(s);
  const double rsm = std::sqrt(std::max(s - m, 0.0));
  const double p = cfg.l * rsm;      // habitat exponent
  const double q = alpha * rs;       // gap exponent
  const double r = beta * rs;        // fragmentation exponent (cosh: sign-free)
  const double w = lambda * cfg.L0;

  ExpSum f;
  f.add_sinh_sinh(4.0 * (2.0 * s - m) * rs * rsm, p, q);
  // m^2 cosh(beta sqrt s) (1 - cosh(l sqrt(s-m)))
  f.add_cosh(m * m, r);
  f.add_cosh_cosh(-m * m, r, p);
  // 8 s (s - m) (cosh p cosh q - cosh(lambda L0))
  f.add_cosh_cosh(8.0 * s * (s - m), p, q);
  f.add_cosh(-8.0 * s * (s - m), w);
  // m^2 cosh(alpha sqrt s) (cosh(l sqrt(s-m)) - 1)
  f.add_cosh_cosh(m * m, q, p);
  f.add_cosh(-m * m, q);
  return f.eval_scaled();
}

double G_eval(const PatchConfig& cfg, double z, double s) {
  cfg.validate();
  const double m = cfg.m;
  if (s <= m) throw DomainError("G is defined for s > m");
  if (z < 0.0 || z > cfg.L0 - cfg.l + 1e-12 * cfg.L0)
    throw InvalidPatchGeometry("z must lie in [0, L0 - l]");

  const double alpha = cfg.L0 - cfg.l;
  const double beta = cfg.L0 - cfg.l - 2.0 * z;
  const double rs = std::sqrt(s);
  const double rsm = std::sqrt(s - m);
  const double p = cfg.l * rsm;
  const double q = alpha * rs;
  const double r = beta * rs;  // sinh(r) is sign-sensitive, keep beta signed

  ExpSum g;
  // m sqrt(s) cosh(p) [ 4 sinh(q)(s/m - 1)
  //                     + (sinh(q) - sinh(r)) (1 - 1/cosh(p)) ]
  // expanded as m sqrt(s) [4 (s/m-1) sinh q cosh p
  //                        + (sinh q - sinh r)(cosh p - 1)].
  g.add_sinh_cosh(4.0 * rs * (s - m), q, p);
  g.add_sinh_cosh(m * rs, q, p);
  g.add_sinh(-m * rs, q);
  g.add_sinh_cosh(-m * rs, r, p);
  g.add_sinh(m * rs, r);
  // m sqrt(s-m) sinh(p) cosh(q) [4s/m - 1 + cosh(r)/cosh(q)]
  g.add_sinh_cosh((4.0 * s - m) * rsm, p, q);
  g.add_sinh_cosh(m * rsm, p, r);
  return g.eval_scaled();
}

PatchDispersion k_patch(const PatchConfig& cfg, double lambda) {
  cfg.validate();
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw InvalidRequest("lambda must be > 0");

  const double m = cfg.m;
  const double s_lo = std::max(m * (1.0 + 1e-9),
                               lambda * lambda + m * cfg.l / cfg.L0);
  const double s_hi = lambda * lambda + m;

  auto f = [&](double s) { return F_eval(cfg, cfg.z, lambda, s); };

  // Scan downward from the analytic upper bound; the first sign change met
  // is the largest root.
  const int subdivisions = 2000;
  const double step = (s_hi - s_lo) / subdivisions;
  double s_prev = s_hi;
  double f_prev = f(s_prev);
  double root_lo = 0.0, root_hi = 0.0;
  bool found = false;
  for (int j = 1; j <= subdivisions; ++j) {
    const double s_next = s_hi - j * step;
    const double f_next = f(s_next);
    if (f_prev == 0.0) {
      root_lo = root_hi = s_prev;
      found = true;
      break;
    }
    if (f_prev * f_next <= 0.0) {
      root_lo = s_next;
      root_hi = s_prev;
      found = true;
      break;
    }
    s_prev = s_next;
    f_prev = f_next;
  }
  if (!found)
    throw NoRootAboveM("no root of F with s > m in [" + std::to_string(s_lo) +
                       ", " + std::to_string(s_hi) +
                       "]; use the grid eigensolver for this regime");

  double f_hi = f(root_hi);
  while (root_hi - root_lo > 1e-13 * std::max(1.0, std::abs(root_hi))) {
    const double mid = 0.5 * (root_lo + root_hi);
    const double fm = f(mid);
    if (fm == 0.0) {
      root_lo = root_hi = mid;
      break;
    }
    if (fm * f_hi <= 0.0) {
      root_lo = mid;
    } else {
      root_hi = mid;
      f_hi = fm;
    }
  }

  PatchDispersion out;
  out.cfg = cfg;
  out.lambda = lambda;
  out.k = 0.5 * (root_lo + root_hi);
  out.bracket = {s_lo, s_hi};
  out.f_residual = std::abs(f(out.k));
  return out;
}

namespace {

// Grid-eigensolver value of k for the cell-averaged patch landscape,
// used where the closed form loses validity (k <= m).
double k_patch_grid(const PatchConfig& cfg, double lambda, int n = 512) {
  ProfilePair pair = build_patch_profiles(cfg);
  EigenRequest req{pair, lambda, cfg.L0, n};
  return principal_eigenvalue(req).k;
}

}  // namespace

PatchSpeedResult c_star_patch(const PatchConfig& cfg) {
  cfg.validate();
  PatchSpeedResult out;
  out.regime_warning = !(cfg.l / cfg.L0 > 0.75);

  double last_k = 0.0;
  auto q = [&](double lambda) {
    double k;
    try {
      k = k_patch(cfg, lambda).k;
    } catch (const NoRootAboveM&) {
      k = k_patch_grid(cfg, lambda);
    }
    last_k = k;
    return k / lambda;
  };

  MinimizeOutcome mo = minimize_unimodal(q);
  out.speed.lambda_star = mo.lambda_star;
  q(mo.lambda_star);
  out.speed.k_at_min = last_k;
  out.speed.c_star = out.speed.k_at_min / out.speed.lambda_star;
  out.speed.L = cfg.L0;
  out.speed.bracket = mo.bracket;
  out.speed.evals = mo.evals + 1;
  return out;
}

FragSweepReport frag_sweep(const PatchConfig& cfg_base, int z_count) {
  cfg_base.validate();
  if (z_count < 5 || z_count % 2 == 0)
    throw InvalidRequest("z_count must be odd and >= 5");

  const double z_max = cfg_base.L0 - cfg_base.l;
  FragSweepReport report;
  report.rows.reserve(z_count);
  for (int i = 0; i < z_count; ++i) {
    PatchConfig cfg = cfg_base;
    cfg.z = z_max * static_cast<double>(i) / (z_count - 1);
    PatchSpeedResult r = c_star_patch(cfg);
    report.rows.push_back({cfg.z, r.speed.c_star, r.speed.lambda_star,
                           r.speed.k_at_min, r.regime_warning});
    report.regime_warning = report.regime_warning || r.regime_warning;
  }

  const int mid = (z_count - 1) / 2;
  report.monotone_decreasing = true;
  report.monotone_increasing = true;
  for (int i = 1; i <= mid; ++i)
    report.monotone_decreasing =
        report.monotone_decreasing &&
        report.rows[i].c_star < report.rows[i - 1].c_star;
  for (int i = mid + 1; i < z_count; ++i)
    report.monotone_increasing =
        report.monotone_increasing &&
        report.rows[i].c_star > report.rows[i - 1].c_star;

  double defect = 0.0;
  for (int i = 0; i < z_count; ++i)
    defect = std::max(defect, std::abs(report.rows[i].c_star -
                                       report.rows[z_count - 1 - i].c_star));
  report.symmetry_defect = defect;
  return report;
}

}  // namespace pulsefront
