#pragma once

#include <random>
#include <string>
#include <vector>

#include <pulsefront/profiles.hpp>

namespace pulsefront::testing {

struct NamedPair {
  std::string name;
  ProfilePair pair;
};

// The recurring specimens used across the suites.
inline std::vector<NamedPair> catalog_pairs() {
  using P = PeriodicProfile;
  std::vector<NamedPair> out;
  out.push_back({"homogeneous", ProfilePair(P::constant(1.0), P::constant(1.0))});
  out.push_back({"recip-sin/sin",
                 ProfilePair(P::reciprocal_sinusoid(0.3), P::sinusoid(1.0, 0.5, 1))});
  out.push_back({"flat-a/sin-mu", ProfilePair(P::constant(1.0), P::sinusoid(1.0, 0.5, 1))});
  out.push_back({"degenerate",
                 ProfilePair(P::reciprocal_sinusoid(0.4), P::sinusoid(1.0, -0.4, 1))});
  out.push_back({"piecewise-a",
                 ProfilePair(P::piecewise_constant({0.0, 0.5}, {1.0, 4.0}), P::constant(1.0))});
  out.push_back({"patch-0.8-0.1",
                 build_patch_profiles(PatchConfig{1.0, 0.8, 0.1, 1.0})});
  return out;
}

// Random catalog profiles for the bounds suite. Diffusivities stay well
// above zero; growth rates keep a positive mean but may dip negative.
inline PeriodicProfile random_diffusivity(std::mt19937& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  switch (rng() % 5) {
    case 0:
      return PeriodicProfile::constant(0.5 + 2.5 * u01(rng));
    case 1: {
      const double mean = 0.8 + 1.2 * u01(rng);
      return PeriodicProfile::sinusoid(mean, 0.7 * mean * u01(rng),
                                       1 + static_cast<int>(rng() % 3));
    }
    case 2:
      return PeriodicProfile::reciprocal_sinusoid(-0.7 + 1.4 * u01(rng));
    case 3: {
      const int k = 2 + static_cast<int>(rng() % 3);
      std::vector<double> bp{0.0}, vals;
      for (int i = 1; i < k; ++i) bp.push_back(bp.back() + (1.0 - bp.back()) * (0.2 + 0.6 * u01(rng)));
      for (int i = 0; i < k; ++i) vals.push_back(0.5 + 2.5 * u01(rng));
      return PeriodicProfile::piecewise_constant(bp, vals);
    }
    default: {
      const int k = 8 + static_cast<int>(rng() % 25);
      std::vector<double> s(k);
      for (auto& v : s) v = 0.5 + 2.5 * u01(rng);
      return PeriodicProfile::grid(s);
    }
  }
}

inline PeriodicProfile random_growth(std::mt19937& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  switch (rng() % 4) {
    case 0:
      return PeriodicProfile::constant(0.3 + 1.7 * u01(rng));
    case 1: {
      const double mean = 0.4 + 1.2 * u01(rng);
      return PeriodicProfile::sinusoid(mean, 1.6 * mean * u01(rng),
                                       1 + static_cast<int>(rng() % 3));
    }
    case 2: {
      const int k = 2 + static_cast<int>(rng() % 3);
      std::vector<double> bp{0.0}, vals;
      for (int i = 1; i < k; ++i) bp.push_back(bp.back() + (1.0 - bp.back()) * (0.2 + 0.6 * u01(rng)));
      double mean = 0.0;
      for (int i = 0; i < k; ++i) vals.push_back(-0.4 + 2.2 * u01(rng));
      PeriodicProfile p = PeriodicProfile::piecewise_constant(bp, vals);
      mean = p.arithmetic_mean();
      if (mean <= 0.05) {
        for (auto& v : vals) v += 0.1 - mean + 0.4;
        p = PeriodicProfile::piecewise_constant(bp, vals);
      }
      return p;
    }
    default: {
      const int k = 8 + static_cast<int>(rng() % 25);
      std::vector<double> s(k);
      double mean = 0.0;
      for (auto& v : s) {
        v = -0.3 + 2.0 * u01(rng);
        mean += v;
      }
      mean /= k;
      if (mean <= 0.05)
        for (auto& v : s) v += 0.4 - mean;
      return PeriodicProfile::grid(s);
    }
  }
}

inline ProfilePair random_catalog_pair(std::mt19937& rng) {
  return ProfilePair(random_diffusivity(rng), random_growth(rng));
}

}  // namespace pulsefront::testing
