#include "motif/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

#include "motif/errors.hpp"
#include "motif/rng.hpp"

namespace motif {

namespace {

constexpr double kDegenerateStd = 1e-8;

// Pairs (a, b) with a < b are enumerated row-major:
// t = a*(2J - a - 1)/2 + (b - a - 1).
std::pair<std::size_t, std::size_t> decode_pair(std::uint64_t t, std::uint64_t j_count) {
  // Invert the triangular offset with a sqrt guess, then correct.
  const double jd = static_cast<double>(j_count);
  const double disc = (2.0 * jd - 1.0) * (2.0 * jd - 1.0) - 8.0 * static_cast<double>(t);
  auto a = static_cast<std::uint64_t>(
      std::max(0.0, std::floor((2.0 * jd - 1.0 - std::sqrt(std::max(0.0, disc))) / 2.0)));
  auto row_offset = [&](std::uint64_t r) { return r * (2 * j_count - r - 1) / 2; };
  while (a > 0 && row_offset(a) > t) --a;
  while (row_offset(a + 1) <= t) ++a;
  const std::uint64_t b = a + 1 + (t - row_offset(a));
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

}  // namespace

SegmentMatrix SegmentMatrix::from_rows(Matrix rows) {
  SegmentMatrix segments;
  segments.stride = 1;
  segments.source_offsets.resize(rows.rows);
  std::iota(segments.source_offsets.begin(), segments.source_offsets.end(), std::size_t{0});
  segments.data = std::move(rows);
  return segments;
}

std::vector<double> znormalize(const std::vector<double>& segment) {
  if (segment.empty()) return {};
  const auto n = static_cast<double>(segment.size());
  const double mean = std::accumulate(segment.begin(), segment.end(), 0.0) / n;
  double var = 0.0;
  for (const double v : segment) {
    const double d = v - mean;
    var += d * d;
  }
  const double popstd = std::sqrt(var / n);
  std::vector<double> out(segment.size(), 0.0);
  if (popstd < kDegenerateStd) {
    return out;  // constant segment: comparable all-zeros row
  }
  for (std::size_t i = 0; i < segment.size(); ++i) {
    out[i] = (segment[i] - mean) / popstd;
  }
  return out;
}

SegmentMatrix extract_segments(const TimeSeries& series, std::size_t window_length,
                               std::size_t stride) {
  if (window_length == 0 || stride == 0) {
    throw Error(ErrorCode::ConfigError, "window length and stride must be positive");
  }
  const std::size_t n = series.values.size();
  if (n < window_length) {
    throw Error(ErrorCode::SeriesTooShort,
                "series has " + std::to_string(n) + " points, window needs " +
                    std::to_string(window_length));
  }

  const std::size_t j_count = (n - window_length) / stride + 1;
  SegmentMatrix segments;
  segments.stride = stride;
  segments.data = Matrix(j_count, window_length);
  segments.source_offsets.resize(j_count);

  std::vector<double> window(window_length);
  for (std::size_t j = 0; j < j_count; ++j) {
    const std::size_t offset = j * stride;
    segments.source_offsets[j] = offset;
    std::copy_n(series.values.begin() + static_cast<std::ptrdiff_t>(offset),
                window_length, window.begin());
    const std::vector<double> normalized = znormalize(window);
    std::copy(normalized.begin(), normalized.end(), segments.data.row(j).begin());
  }
  return segments;
}

Threshold percentile_threshold(const SegmentMatrix& segments, double pct,
                               std::size_t sample_budget, std::uint64_t seed) {
  const std::size_t j_count = segments.count();
  if (j_count < 2) {
    throw Error(ErrorCode::TooFewSegments, "percentile needs at least 2 segments");
  }
  if (!(pct > 0.0 && pct < 100.0)) {
    throw Error(ErrorCode::ConfigError, "percentile must lie in (0, 100)");
  }
  if (sample_budget == 0) {
    throw Error(ErrorCode::ConfigError, "sample budget must be positive");
  }

  const std::uint64_t total_pairs =
      static_cast<std::uint64_t>(j_count) * (j_count - 1) / 2;
  std::vector<double> dists;

  if (total_pairs <= sample_budget) {
    dists.reserve(static_cast<std::size_t>(total_pairs));
    for (std::size_t a = 0; a < j_count; ++a) {
      for (std::size_t b = a + 1; b < j_count; ++b) {
        dists.push_back(squared_distance(segments.data.row(a), segments.data.row(b)));
      }
    }
  } else {
    // Uniform sample of pair indices without replacement; the sampled set
    // depends only on the seed.
    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(sample_budget * 2);
    dists.reserve(sample_budget);
    while (chosen.size() < sample_budget) {
      const std::uint64_t t = rng() % total_pairs;
      if (chosen.insert(t).second) {
        const auto [a, b] = decode_pair(t, j_count);
        dists.push_back(squared_distance(segments.data.row(a), segments.data.row(b)));
      }
    }
  }

  std::sort(dists.begin(), dists.end());
  const double rank = pct / 100.0 * static_cast<double>(dists.size() - 1);
  const auto lo = static_cast<std::size_t>(rank);
  const std::size_t hi = std::min(lo + 1, dists.size() - 1);
  const double frac = rank - static_cast<double>(lo);

  Threshold threshold;
  threshold.value = dists[lo] + frac * (dists[hi] - dists[lo]);
  threshold.percentile = pct;
  threshold.sampled_pairs = dists.size();
  return threshold;
}

}  // namespace motif
