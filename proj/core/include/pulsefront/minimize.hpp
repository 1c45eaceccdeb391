#pragma once

#include <functional>
#include <utility>

namespace pulsefront {

// Minimizes a unimodal q(lambda) over lambda > 0: bracket expansion (double
// the upper end until q increases across the last three probes, halve the
// lower end until q decreases across the first three), then golden-section
// down to the requested relative width. Throws BracketFailure when no
// interior minimum shows up inside [lambda_floor, lambda_ceil].
struct BracketPolicy {
  double lambda_lo = 0.05;
  double lambda_hi = 8.0;
  double lambda_floor = 1e-6;
  double lambda_ceil = 1e6;
  double rel_width = 1e-8;
};

struct MinimizeOutcome {
  double lambda_star = 0.0;
  double q_min = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  long evals = 0;
};

MinimizeOutcome minimize_unimodal(const std::function<double(double)>& q,
                                  const BracketPolicy& policy = {});

}  // namespace pulsefront
