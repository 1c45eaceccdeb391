#include "pulsefront/quadrature.hpp"

namespace pulsefront {

std::vector<double> periodic_cumulative(const std::vector<double>& f) {
  const std::size_t n = f.size();
  const double h = 1.0 / static_cast<double>(n);
  std::vector<double> out(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double fm = f[(i + n - 1) % n];
    const double f0 = f[i];
    const double f1 = f[(i + 1) % n];
    const double f2 = f[(i + 2) % n];
    out[i + 1] = out[i] + h / 24.0 * (-fm + 13.0 * f0 + 13.0 * f1 - f2);
  }
  return out;
}

}  // namespace pulsefront
