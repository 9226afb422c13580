#pragma once

#include <cstdint>
#include <vector>

#include "motif/series_io.hpp"

namespace motif {

struct SynthSpec {
  std::size_t length = 0;
  std::size_t pattern_length = 0;
  std::size_t occurrences = 0;
  double noise_sd = 0.0;
  std::uint64_t seed = 0;
};

struct SyntheticSeries {
  TimeSeries series;                  // offsets also embedded in series.source
  std::vector<std::size_t> offsets;   // implant starts, ascending
  std::vector<double> pattern;        // the implanted template
};

// Seeded random walk (unit-variance Gaussian steps) with a fixed seeded smooth
// pattern added at `occurrences` non-overlapping uniformly drawn offsets, each
// copy corrupted by Gaussian noise of sd `noise_sd`.
// Requires occurrences * pattern_length <= length / 2.
SyntheticSeries generate_synthetic(const SynthSpec& spec);

}  // namespace motif
