#pragma once

#include <string>
#include <vector>

#include "pulsefront/profiles.hpp"

namespace pulsefront::io {

// Profile descriptors:
//   {"kind": "constant", "value": 1.0}
//   {"kind": "sinusoid", "mean": 1.0, "amplitude": 0.5, "harmonic": 1}
//   {"kind": "reciprocal-sinusoid", "eps": 0.3}
//   {"kind": "piecewise-constant", "breakpoints": [...], "values": [...]}
//   {"kind": "grid", "samples": [...]}
// A pair file is {"a": <profile>, "mu": <profile>}; a patch file is
// {"L0": .., "l": .., "z": .., "m": ..}. Malformed input throws BadConfig.
PeriodicProfile parse_profile_json(const std::string& text);
ProfilePair parse_pair_json(const std::string& text);
PatchConfig parse_patch_json(const std::string& text);

ProfilePair load_pair(const std::string& path);
PatchConfig load_patch(const std::string& path);

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;  // one vector per header entry

  std::size_t rows() const { return columns.empty() ? 0 : columns[0].size(); }
  const std::vector<double>& column(const std::string& name) const;  // MissingColumn
};

// Deterministic CSV: fixed "%.12g" formatting, '\n' line ends.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);
Csv read_csv(const std::string& path);

// Single-polyline SVG with axes, tick labels and column-name axis titles.
// Byte-deterministic for identical input.
void plot_csv(const std::string& csv_in, const std::string& svg_out,
              const std::string& x_col, const std::string& y_col);

}  // namespace pulsefront::io
