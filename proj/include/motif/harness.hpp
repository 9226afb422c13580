#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "motif/report.hpp"
#include "motif/series_io.hpp"

namespace motif {

enum class Method { Learn, Brute };

// Full description of one discovery run. Exactly one threshold source
// (explicit value or percentile) must be set.
struct RunSpec {
  std::filesystem::path input;
  SeriesFormat format = SeriesFormat::Plain;
  std::optional<std::size_t> column;
  char delimiter = ',';

  std::size_t window_length = 0;          // L, required
  std::optional<std::size_t> stride;      // default max(1, L/2)
  std::size_t motif_count = 3;            // K

  std::optional<double> threshold;        // explicit T
  std::optional<double> percentile;       // percent of pairwise distances below T
  std::size_t sample_budget = 2'000'000;

  std::vector<double> alpha_grid = {1.0, 2.0, 3.0};
  double eta = 0.1;
  std::size_t iters = 1000;
  std::size_t restarts = 200;
  std::uint64_t seed = 0;
  std::vector<Method> methods = {Method::Learn, Method::Brute};
  bool trace = false;
  unsigned threads = 1;

  std::filesystem::path output;           // empty: report not written
  ReportFormat output_format = ReportFormat::Json;
};

// Loads the series, segments it, resolves T, evaluates the requested methods
// against the identical segment matrix and threshold, writes the report when
// an output path is set, and returns it. The learner runs once per grid alpha
// and keeps the highest total hard frequency (ties: smaller alpha).
DiscoveryReport run(const RunSpec& spec);

// CSV comparison across reports that contain both methods: one row per report
// (dataset, K, L, pct, totals, winner, relative improvement) plus a summary
// row with win counts and mean/sd improvement.
std::string compare_table(const std::vector<DiscoveryReport>& reports);

}  // namespace motif
