#pragma once

#include <cstddef>
#include <vector>

namespace pulsefront {

enum class ProfileKind {
  Constant,
  Sinusoid,            // mean + amplitude * sin(2*pi*harmonic*x)
  ReciprocalSinusoid,  // 1 / (1 + eps * sin(2*pi*x))
  PiecewiseConstant,
  Grid,                // linear interpolation of uniform unit-cell samples
};

// A 1-periodic coefficient profile on the unit cell. Immutable after
// construction; scaling by the period L happens in the consumers, profiles
// always live on [0,1).
class PeriodicProfile {
public:
  static PeriodicProfile constant(double value);
  static PeriodicProfile sinusoid(double mean, double amplitude, int harmonic = 1);
  static PeriodicProfile reciprocal_sinusoid(double eps);
  static PeriodicProfile piecewise_constant(std::vector<double> breakpoints,
                                            std::vector<double> values);
  static PeriodicProfile grid(std::vector<double> samples);

  ProfileKind kind() const { return kind_; }

  // 1-periodic evaluation; total on valid profiles.
  double operator()(double x) const;

  // Exact range per kind (grid: extremes of the interpolant = extreme samples).
  double min_value() const;
  double max_value() const;

  double arithmetic_mean() const;
  // Reciprocal of the mean of 1/p; requires min_value() > 0.
  double harmonic_mean() const;

  // Mean of p (resp. 1/p) over [x0,x1], 0 < x1-x0 <= 1, wrapping allowed.
  // Segment-exact for constant and piecewise kinds.
  double mean_on(double x0, double x1) const;
  double harmonic_mean_on(double x0, double x1) const;

  // Accessors used by serialization.
  double constant_value() const { return p0_; }
  double sinusoid_mean() const { return p0_; }
  double sinusoid_amplitude() const { return p1_; }
  int sinusoid_harmonic() const { return harmonic_; }
  double reciprocal_eps() const { return p0_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& samples() const { return values_; }

private:
  PeriodicProfile(ProfileKind kind) : kind_(kind) {}

  double integral_on_unit(double x0, double x1, bool reciprocal) const;

  ProfileKind kind_;
  double p0_ = 0.0;  // constant value / sinusoid mean / eps
  double p1_ = 0.0;  // sinusoid amplitude
  int harmonic_ = 1;
  std::vector<double> breakpoints_;  // piecewise only
  std::vector<double> values_;       // piecewise values or grid samples
};

// Diffusivity/growth pair (a, mu). Construction enforces a >= alpha_1 > 0;
// positivity of the mean growth is a per-use hypothesis, checked where the
// theory needs it, so mean-zero growth pairs remain representable.
struct ProfilePair {
  PeriodicProfile a;
  PeriodicProfile mu;

  ProfilePair(PeriodicProfile a_in, PeriodicProfile mu_in);
};

// Two-valued habitat geometry: growth m on a length-l region (split in two
// fragments of length l/2 separated by the gap z) in a cell of period L0.
struct PatchConfig {
  double L0 = 1.0;
  double l = 0.5;
  double z = 0.0;
  double m = 1.0;

  void validate() const;  // throws InvalidPatchGeometry
};

// Unit-cell rescaling of the patch landscape: a == 1, mu piecewise-constant
// with value m on [0, l/(2 L0)) U [(l/2+z)/L0, (l+z)/L0) and 0 elsewhere.
ProfilePair build_patch_profiles(const PatchConfig& cfg);

}  // namespace pulsefront
