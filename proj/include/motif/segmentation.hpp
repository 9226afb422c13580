#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "motif/matrix.hpp"
#include "motif/series_io.hpp"

namespace motif {

// Z-normalized sliding-window view of a series: J rows of length L, window
// starts `stride` points apart.
struct SegmentMatrix {
  Matrix data;
  std::size_t stride = 1;
  std::vector<std::size_t> source_offsets;

  std::size_t count() const { return data.rows; }
  std::size_t length() const { return data.cols; }

  // Wraps rows that are already normalized (or deliberately not normalized,
  // e.g. hand-built test fixtures). Offsets default to 0,1,...,J-1.
  static SegmentMatrix from_rows(Matrix rows);
};

// Distance threshold in squared-Euclidean units over length-L segments.
// `percentile` records how the value was derived, when it was.
struct Threshold {
  double value = 0.0;
  std::optional<double> percentile;
  std::size_t sampled_pairs = 0;

  Threshold() = default;
  explicit Threshold(double v) : value(v) {}
  Threshold(double v, std::optional<double> pct, std::size_t pairs)
      : value(v), percentile(pct), sampled_pairs(pairs) {}
};

// (x - mean(x)) / popstd(x); the all-zeros vector when popstd(x) < 1e-8.
std::vector<double> znormalize(const std::vector<double>& segment);

// Row j = znormalize(series[j*stride .. j*stride+L)), J = floor((N-L)/stride)+1.
SegmentMatrix extract_segments(const TimeSeries& series, std::size_t window_length,
                               std::size_t stride);

// pct-th percentile (linear interpolation between order statistics) of squared
// Euclidean distances over segment pairs: all J(J-1)/2 pairs when that count
// fits the budget, otherwise `sample_budget` pairs drawn uniformly without
// replacement from the seeded generator.
Threshold percentile_threshold(const SegmentMatrix& segments, double pct,
                               std::size_t sample_budget, std::uint64_t seed);

}  // namespace motif
