#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "motif/learner.hpp"
#include "motif/matrix.hpp"
#include "motif/segmentation.hpp"

namespace motif {

enum class ReportFormat { Json, Csv };

// Everything the run resolved, echoed into the report so results are
// reproducible from the report alone.
struct ResolvedConfig {
  std::string input;
  std::string format;  // "plain" | "csv" | "memory"
  std::optional<std::size_t> column;
  char delimiter = ',';
  std::size_t series_length = 0;   // N
  std::size_t window_length = 0;   // L
  std::size_t stride = 0;
  std::size_t segment_count = 0;   // J
  std::size_t motif_count = 0;     // K
  Threshold threshold;
  std::size_t sample_budget = 0;
  std::vector<double> alpha_grid;
  double eta = 0.0;
  std::size_t iters = 0;
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> methods;
  bool trace = false;
};

struct MethodResult {
  std::string name;  // "learn" | "brute"
  Matrix motifs;     // K x L
  std::vector<std::int64_t> frequencies;
  std::int64_t total_frequency = 0;
  std::vector<std::vector<std::size_t>> matches;
  std::optional<LearnTraces> trace;

  bool short_selection = false;            // brute: ran out of diverse segments
  bool nonzero_violation = false;          // learn: no zero-violation restart
  std::optional<double> alpha;             // learn: winning grid value
  std::optional<std::size_t> restart_index;
  std::vector<std::size_t> origin_segments;  // brute picks / learn init
  double hard_violation = 0.0;

  // Recorded for operators, deliberately kept out of the serialized report so
  // identical runs produce identical bytes.
  double wall_seconds = 0.0;
};

struct DiscoveryReport {
  ResolvedConfig config;
  std::vector<MethodResult> methods;
};

// json: one document (schema in README). csv: flat (method,motif_index,frequency)
// table plus a sibling "<stem>_motifs.csv" with one motif per row. All writes
// are atomic; an existing file is never partially overwritten.
void write_report(const DiscoveryReport& report, const std::filesystem::path& path,
                  ReportFormat format);

// Reads back a JSON report written by write_report.
DiscoveryReport read_report_json(const std::filesystem::path& path);

}  // namespace motif
