#include "pulsefront/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pulsefront/errors.hpp"
#include "pulsefront/quadrature.hpp"

namespace pulsefront {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_unit(double x) {
  double y = x - std::floor(x);
  if (y >= 1.0) y = 0.0;  // guards x = -1e-18 rounding to 1.0
  return y;
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v))
    throw InvalidProfile(std::string(name) + " must be finite");
}

}  // namespace

PeriodicProfile PeriodicProfile::constant(double value) {
  require_finite(value, "constant value");
  PeriodicProfile p(ProfileKind::Constant);
  p.p0_ = value;
  return p;
}

PeriodicProfile PeriodicProfile::sinusoid(double mean, double amplitude, int harmonic) {
  require_finite(mean, "sinusoid mean");
  require_finite(amplitude, "sinusoid amplitude");
  if (harmonic < 1) throw InvalidProfile("sinusoid harmonic index must be >= 1");
  PeriodicProfile p(ProfileKind::Sinusoid);
  p.p0_ = mean;
  p.p1_ = amplitude;
  p.harmonic_ = harmonic;
  return p;
}

PeriodicProfile PeriodicProfile::reciprocal_sinusoid(double eps) {
  require_finite(eps, "eps");
  if (std::abs(eps) >= 1.0)
    throw InvalidProfile("reciprocal-sinusoid requires |eps| < 1");
  PeriodicProfile p(ProfileKind::ReciprocalSinusoid);
  p.p0_ = eps;
  return p;
}

PeriodicProfile PeriodicProfile::piecewise_constant(std::vector<double> breakpoints,
                                                    std::vector<double> values) {
  if (breakpoints.empty() || breakpoints.size() != values.size())
    throw InvalidProfile("piecewise-constant needs equally many breakpoints and values");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    require_finite(breakpoints[i], "breakpoint");
    require_finite(values[i], "value");
    if (breakpoints[i] < 0.0 || breakpoints[i] >= 1.0)
      throw InvalidProfile("breakpoints must lie in [0,1)");
    if (i > 0 && breakpoints[i] <= breakpoints[i - 1])
      throw InvalidProfile("breakpoints must be strictly ascending");
  }
  PeriodicProfile p(ProfileKind::PiecewiseConstant);
  p.breakpoints_ = std::move(breakpoints);
  p.values_ = std::move(values);
  return p;
}

PeriodicProfile PeriodicProfile::grid(std::vector<double> samples) {
  if (samples.size() < 2) throw InvalidProfile("grid profile needs >= 2 samples");
  for (double s : samples) require_finite(s, "sample");
  PeriodicProfile p(ProfileKind::Grid);
  p.values_ = std::move(samples);
  return p;
}

double PeriodicProfile::operator()(double x) const {
  const double u = wrap_unit(x);
  switch (kind_) {
    case ProfileKind::Constant:
      return p0_;
    case ProfileKind::Sinusoid:
      return p0_ + p1_ * std::sin(kTwoPi * harmonic_ * u);
    case ProfileKind::ReciprocalSinusoid:
      return 1.0 / (1.0 + p0_ * std::sin(kTwoPi * u));
    case ProfileKind::PiecewiseConstant: {
      // Segment i covers [b_i, b_{i+1}); x below b_0 wraps into the last one.
      auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), u);
      std::size_t idx =
          (it == breakpoints_.begin()) ? values_.size() - 1
                                       : static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
      return values_[idx];
    }
    case ProfileKind::Grid: {
      const std::size_t n = values_.size();
      const double t = u * static_cast<double>(n);
      const std::size_t i = std::min(static_cast<std::size_t>(t), n - 1);
      const double frac = t - static_cast<double>(i);
      const double right = values_[(i + 1) % n];
      return values_[i] + frac * (right - values_[i]);
    }
  }
  return 0.0;  // unreachable
}

double PeriodicProfile::min_value() const {
  switch (kind_) {
    case ProfileKind::Constant:
      return p0_;
    case ProfileKind::Sinusoid:
      return p0_ - std::abs(p1_);
    case ProfileKind::ReciprocalSinusoid:
      return 1.0 / (1.0 + std::abs(p0_));
    case ProfileKind::PiecewiseConstant:
      return *std::min_element(values_.begin(), values_.end());
    case ProfileKind::Grid:
      return *std::min_element(values_.begin(), values_.end());
  }
  return 0.0;
}

double PeriodicProfile::max_value() const {
  switch (kind_) {
    case ProfileKind::Constant:
      return p0_;
    case ProfileKind::Sinusoid:
      return p0_ + std::abs(p1_);
    case ProfileKind::ReciprocalSinusoid:
      return 1.0 / (1.0 - std::abs(p0_));
    case ProfileKind::PiecewiseConstant:
      return *std::max_element(values_.begin(), values_.end());
    case ProfileKind::Grid:
      return *std::max_element(values_.begin(), values_.end());
  }
  return 0.0;
}

double PeriodicProfile::arithmetic_mean() const {
  switch (kind_) {
    case ProfileKind::Constant:
      return p0_;
    case ProfileKind::PiecewiseConstant:
      return integral_on_unit(0.0, 1.0, false);
    case ProfileKind::Grid: {
      // Exact integral of the periodic piecewise-linear interpolant.
      double sum = 0.0;
      for (double s : values_) sum += s;
      return sum / static_cast<double>(values_.size());
    }
    default:
      return midpoint_unit_integral([this](double x) { return (*this)(x); });
  }
}

double PeriodicProfile::harmonic_mean() const {
  if (min_value() <= 0.0)
    throw NonPositiveProfile("harmonic mean requires a strictly positive profile");
  switch (kind_) {
    case ProfileKind::Constant:
      return p0_;
    case ProfileKind::PiecewiseConstant:
      return 1.0 / integral_on_unit(0.0, 1.0, true);
    default:
      return 1.0 /
             midpoint_unit_integral([this](double x) { return 1.0 / (*this)(x); });
  }
}

double PeriodicProfile::integral_on_unit(double u, double v, bool reciprocal) const {
  // [u,v] with 0 <= u <= v <= 1.
  switch (kind_) {
    case ProfileKind::Constant:
      return (v - u) * (reciprocal ? 1.0 / p0_ : p0_);
    case ProfileKind::Sinusoid:
      if (!reciprocal) {
        const double w = kTwoPi * harmonic_;
        return p0_ * (v - u) - p1_ / w * (std::cos(w * v) - std::cos(w * u));
      }
      break;
    case ProfileKind::ReciprocalSinusoid:
      if (reciprocal) {
        // 1/p = 1 + eps sin(2 pi x), integrable in closed form.
        return (v - u) - p0_ / kTwoPi * (std::cos(kTwoPi * v) - std::cos(kTwoPi * u));
      }
      break;
    case ProfileKind::PiecewiseConstant: {
      double acc = 0.0;
      const std::size_t k = breakpoints_.size();
      for (std::size_t i = 0; i < k; ++i) {
        // Segment [b_i, e_i); the final segment also owns [0, b_0) by wrap.
        const double b = breakpoints_[i];
        const double e = (i + 1 < k) ? breakpoints_[i + 1] : 1.0;
        const double val = reciprocal ? 1.0 / values_[i] : values_[i];
        double lo = std::max(u, b), hi = std::min(v, e);
        if (hi > lo) acc += (hi - lo) * val;
      }
      if (breakpoints_[0] > 0.0) {
        const double val = reciprocal ? 1.0 / values_.back() : values_.back();
        double lo = u, hi = std::min(v, breakpoints_[0]);
        if (hi > lo) acc += (hi - lo) * val;
      }
      return acc;
    }
    case ProfileKind::Grid:
      if (!reciprocal) {
        // Exact integral of the piecewise-linear interpolant.
        const std::size_t nseg = values_.size();
        const double seg = 1.0 / static_cast<double>(nseg);
        double acc = 0.0;
        const std::size_t j0 = static_cast<std::size_t>(u * nseg);
        for (std::size_t j = j0; j * seg < v && j < nseg; ++j) {
          const double lo = std::max(u, j * seg);
          const double hi = std::min(v, (j + 1) * seg);
          if (hi <= lo) continue;
          acc += (hi - lo) * 0.5 * ((*this)(lo) + (*this)(hi));
        }
        return acc;
      }
      break;
  }
  // Remaining combinations have no convenient closed form.
  const int pts = 64;
  const double h = (v - u) / pts;
  double acc = 0.0;
  for (int i = 0; i < pts; ++i) {
    const double x = u + (i + 0.5) * h;
    acc += reciprocal ? 1.0 / (*this)(x) : (*this)(x);
  }
  return acc * h;
}

double PeriodicProfile::mean_on(double x0, double x1) const {
  const double w = x1 - x0;
  if (!(w > 0.0) || w > 1.0 + 1e-12)
    throw InvalidRequest("mean_on needs 0 < x1 - x0 <= 1");
  const double u = wrap_unit(x0);
  const double v = u + w;
  double acc = (v <= 1.0) ? integral_on_unit(u, v, false)
                          : integral_on_unit(u, 1.0, false) +
                                integral_on_unit(0.0, v - 1.0, false);
  return acc / w;
}

double PeriodicProfile::harmonic_mean_on(double x0, double x1) const {
  const double w = x1 - x0;
  if (!(w > 0.0) || w > 1.0 + 1e-12)
    throw InvalidRequest("harmonic_mean_on needs 0 < x1 - x0 <= 1");
  const double u = wrap_unit(x0);
  const double v = u + w;
  double acc = (v <= 1.0) ? integral_on_unit(u, v, true)
                          : integral_on_unit(u, 1.0, true) +
                                integral_on_unit(0.0, v - 1.0, true);
  return w / acc;
}

ProfilePair::ProfilePair(PeriodicProfile a_in, PeriodicProfile mu_in)
    : a(std::move(a_in)), mu(std::move(mu_in)) {
  if (!(a.min_value() > 0.0))
    throw NonPositiveProfile("diffusivity a must be bounded below by alpha_1 > 0");
}

void PatchConfig::validate() const {
  if (!std::isfinite(L0) || !std::isfinite(l) || !std::isfinite(z) || !std::isfinite(m))
    throw InvalidPatchGeometry("patch parameters must be finite");
  if (!(L0 > 0.0)) throw InvalidPatchGeometry("L0 must be > 0");
  if (!(l > 0.0 && l < L0)) throw InvalidPatchGeometry("l must lie in (0, L0)");
  if (z < 0.0) throw InvalidPatchGeometry("z must be >= 0");
  if (l + z > L0) throw InvalidPatchGeometry("l + z must be <= L0");
  if (!(m > 0.0)) throw InvalidPatchGeometry("m must be > 0");
}

ProfilePair build_patch_profiles(const PatchConfig& cfg) {
  cfg.validate();
  const double tol = 1e-14 * cfg.L0;
  const double s1 = 0.5 * cfg.l / cfg.L0;          // end of first fragment
  const double s2 = (0.5 * cfg.l + cfg.z) / cfg.L0;  // start of second fragment
  const double s3 = (cfg.l + cfg.z) / cfg.L0;        // end of second fragment

  std::vector<double> bp, vals;
  if (cfg.z <= tol) {
    // Unfragmented habitat [0, l/L0).
    bp = {0.0, cfg.l / cfg.L0};
    vals = {cfg.m, 0.0};
  } else if (s3 >= 1.0 - tol) {
    // Gap wraps around: second fragment ends exactly at the cell boundary.
    bp = {0.0, s1, s2};
    vals = {cfg.m, 0.0, cfg.m};
  } else {
    bp = {0.0, s1, s2, s3};
    vals = {cfg.m, 0.0, cfg.m, 0.0};
  }
  return ProfilePair(PeriodicProfile::constant(1.0),
                     PeriodicProfile::piecewise_constant(std::move(bp), std::move(vals)));
}

}  // namespace pulsefront
