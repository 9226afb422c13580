#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace motif {

// A raw univariate series: finite values in file order plus a provenance tag.
struct TimeSeries {
  std::vector<double> values;
  std::string source;
};

enum class SeriesFormat { Plain, Csv };

// Plain format: whitespace/newline separated numbers, any count per line.
// CSV format: one column of every non-header row; a header is detected as a
// first row whose selected field does not parse as a number. No quoting
// support; dot decimal separator only. NaN/Inf tokens are parse errors.
TimeSeries load_series(const std::filesystem::path& path, SeriesFormat format,
                       std::optional<std::size_t> column = std::nullopt,
                       char delimiter = ',');

// One value per line at 17 significant digits (exact double round-trip).
// Writes via temp file + rename; never leaves a partial file behind.
void write_series(const TimeSeries& series, const std::filesystem::path& path);

// Shared by all writers: write `content` to a temp sibling then rename over
// `path`. Throws IoError without touching `path` on any failure.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

std::string format_double_17(double value);

}  // namespace motif
