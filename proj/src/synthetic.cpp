#include "motif/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "motif/errors.hpp"

namespace motif {

namespace {

// Two seeded sinusoids; amplitude grows with sqrt(P) so the implant dominates
// the walk's within-window variation after Z-normalization.
std::vector<double> make_pattern(std::mt19937_64& rng, std::size_t pattern_length) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const double cycles_a = static_cast<double>(1 + rng() % 3);
  const double cycles_b = static_cast<double>(3 + rng() % 5);
  const double phase_a = phase(rng);
  const double phase_b = phase(rng);
  const double amplitude = 4.0 * std::sqrt(static_cast<double>(pattern_length));

  std::vector<double> pattern(pattern_length);
  for (std::size_t t = 0; t < pattern_length; ++t) {
    const double u = static_cast<double>(t) / static_cast<double>(pattern_length);
    pattern[t] = amplitude * (std::sin(2.0 * std::numbers::pi * cycles_a * u + phase_a) +
                              0.5 * std::sin(2.0 * std::numbers::pi * cycles_b * u + phase_b));
  }
  return pattern;
}

}  // namespace

SyntheticSeries generate_synthetic(const SynthSpec& spec) {
  if (spec.length == 0 || spec.pattern_length == 0 || spec.occurrences == 0) {
    throw Error(ErrorCode::ConfigError,
                "length, pattern length and occurrences must be positive");
  }
  if (spec.occurrences * spec.pattern_length > spec.length / 2) {
    throw Error(ErrorCode::ConfigError,
                "implants must cover at most half the series: " +
                    std::to_string(spec.occurrences) + " x " +
                    std::to_string(spec.pattern_length) + " > " +
                    std::to_string(spec.length / 2));
  }

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  SyntheticSeries out;
  out.pattern = make_pattern(rng, spec.pattern_length);

  out.series.values.resize(spec.length);
  double level = 0.0;
  for (std::size_t i = 0; i < spec.length; ++i) {
    level += gauss(rng);
    out.series.values[i] = level;
  }

  // Non-overlapping uniform placement by bounded rejection.
  const std::size_t max_offset = spec.length - spec.pattern_length;
  const std::size_t max_attempts = 1000 * spec.occurrences;
  std::size_t attempts = 0;
  while (out.offsets.size() < spec.occurrences) {
    if (++attempts > max_attempts) {
      throw Error(ErrorCode::InfeasiblePacking,
                  "could not place " + std::to_string(spec.occurrences) +
                      " non-overlapping implants after " +
                      std::to_string(max_attempts) + " attempts");
    }
    const std::size_t offset = rng() % (max_offset + 1);
    const bool overlaps = std::any_of(
        out.offsets.begin(), out.offsets.end(), [&](std::size_t existing) {
          return offset < existing + spec.pattern_length &&
                 existing < offset + spec.pattern_length;
        });
    if (!overlaps) out.offsets.push_back(offset);
  }
  std::sort(out.offsets.begin(), out.offsets.end());

  for (const std::size_t offset : out.offsets) {
    for (std::size_t t = 0; t < spec.pattern_length; ++t) {
      double corruption = 0.0;
      if (spec.noise_sd > 0.0) corruption = spec.noise_sd * gauss(rng);
      out.series.values[offset + t] += out.pattern[t] + corruption;
    }
  }

  std::ostringstream source;
  source << "synthetic:seed=" << spec.seed << ";length=" << spec.length
         << ";pattern_length=" << spec.pattern_length << ";noise_sd=" << spec.noise_sd
         << ";offsets=";
  for (std::size_t i = 0; i < out.offsets.size(); ++i) {
    if (i > 0) source << ',';
    source << out.offsets[i];
  }
  out.series.source = source.str();
  return out;
}

}  // namespace motif
