#pragma once

#include <cstddef>
#include <vector>

namespace pulsefront {

inline constexpr int kDefaultQuadraturePoints = 4096;

// Composite midpoint rule over the unit cell. Spectrally accurate for smooth
// 1-periodic integrands.
template <class F>
double midpoint_unit_integral(F&& f, int n = kDefaultQuadraturePoints) {
  const double h = 1.0 / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += f((i + 0.5) * h);
  return sum * h;
}

// Cumulative integral of a 1-periodic function tabulated at the n nodes
// x_i = i/n. Returns n+1 values F(x_0)..F(x_n) with F(0) = 0, fourth-order
// accurate via the two-sided Newton-Cotes interval rule with periodic wrap:
//   int_{x_i}^{x_{i+1}} f = h/24 (-f_{i-1} + 13 f_i + 13 f_{i+1} - f_{i+2}).
// Summed over the full period this telescopes to the rectangle rule, so the
// endpoint value keeps the spectral accuracy of the periodic trapezoid.
std::vector<double> periodic_cumulative(const std::vector<double>& f_nodes);

}  // namespace pulsefront
