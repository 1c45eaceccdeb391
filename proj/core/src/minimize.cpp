#include "pulsefront/minimize.hpp"

#include <cmath>

#include "pulsefront/errors.hpp"

namespace pulsefront {

MinimizeOutcome minimize_unimodal(const std::function<double(double)>& q,
                                  const BracketPolicy& policy) {
  long evals = 0;
  auto eval = [&](double x) {
    ++evals;
    return q(x);
  };

  double hi = policy.lambda_hi;
  // Ladder upward: certify an increasing run over {hi/4, hi/2, hi}.
  double q_hi4 = eval(hi / 4.0), q_hi2 = eval(hi / 2.0), q_hi = eval(hi);
  while (!(q_hi4 < q_hi2 && q_hi2 < q_hi)) {
    hi *= 2.0;
    if (hi > policy.lambda_ceil)
      throw BracketFailure("no increasing tail of k(lambda)/lambda below lambda = 1e6");
    q_hi4 = q_hi2;
    q_hi2 = q_hi;
    q_hi = eval(hi);
  }

  double lo = policy.lambda_lo;
  double q_lo = eval(lo), q_lo2 = eval(2.0 * lo), q_lo4 = eval(4.0 * lo);
  while (!(q_lo > q_lo2 && q_lo2 > q_lo4)) {
    lo *= 0.5;
    if (lo < policy.lambda_floor)
      throw BracketFailure("no decreasing head of k(lambda)/lambda above lambda = 1e-6");
    q_lo4 = q_lo2;
    q_lo2 = q_lo;
    q_lo = eval(lo);
  }

  // Golden section on [lo, hi].
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;   // 1/phi
  const double invphi2 = (3.0 - std::sqrt(5.0)) / 2.0;  // 1/phi^2
  double a = lo, b = hi;
  double x1 = a + invphi2 * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = eval(x1), f2 = eval(x2);
  while (b - a > policy.rel_width * 0.5 * (std::abs(a) + std::abs(b))) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = a + invphi2 * (b - a);
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = eval(x2);
    }
  }

  MinimizeOutcome out;
  out.lambda_star = (f1 < f2) ? x1 : x2;
  out.q_min = std::min(f1, f2);
  out.bracket = {lo, hi};
  out.evals = evals;
  return out;
}

}  // namespace pulsefront
