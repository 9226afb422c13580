#include "motif/series_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "motif/errors.hpp"

namespace motif {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

// Full-token numeric parse, locale independent. Rejects NaN/Inf: downstream
// math assumes finite values.
bool parse_finite(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto result = std::from_chars(first, last, out);
  if (result.ec != std::errc{} || result.ptr != last) return false;
  return std::isfinite(out);
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

void parse_plain_line(std::string_view line, std::size_t line_number,
                      std::vector<double>& values) {
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    double value = 0.0;
    if (!parse_finite(line.substr(pos, end - pos), value)) {
      throw Error(ErrorCode::ParseError,
                  "non-numeric token '" + std::string(line.substr(pos, end - pos)) +
                      "' at line " + std::to_string(line_number));
    }
    values.push_back(value);
    pos = end;
  }
}

}  // namespace

TimeSeries load_series(const std::filesystem::path& path, SeriesFormat format,
                       std::optional<std::size_t> column, char delimiter) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::FileNotFound, "cannot open " + path.string());
  }

  TimeSeries series;
  const std::size_t col = column.value_or(0);
  std::string line;
  std::size_t line_number = 0;
  bool saw_row = false;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view trimmed = trim(line);
    if (trimmed.empty()) continue;

    if (format == SeriesFormat::Plain) {
      parse_plain_line(trimmed, line_number, series.values);
      continue;
    }

    const auto fields = split(trimmed, delimiter);
    double value = 0.0;
    const bool in_range = col < fields.size();
    const bool ok = in_range && parse_finite(trim(fields[col]), value);
    if (!ok) {
      if (!saw_row) {
        // First row failing numeric parse in the selected field: header.
        saw_row = true;
        continue;
      }
      if (!in_range) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_number) + " has " +
                        std::to_string(fields.size()) + " field(s), column " +
                        std::to_string(col) + " requested");
      }
      throw Error(ErrorCode::ParseError,
                  "non-numeric field '" + std::string(trim(fields[col])) + "' at line " +
                      std::to_string(line_number));
    }
    saw_row = true;
    series.values.push_back(value);
  }

  if (series.values.empty()) {
    throw Error(ErrorCode::EmptySeries, "no values parsed from " + path.string());
  }

  series.source = path.string();
  if (format == SeriesFormat::Csv) {
    series.source += ":" + std::to_string(col);
  }
  return series;
}

std::string format_double_17(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path temp = path.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::IoError, "cannot open " + temp.string() + " for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(temp, ec);
      throw Error(ErrorCode::IoError, "write failed for " + temp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(temp, ignored);
    throw Error(ErrorCode::IoError,
                "rename to " + path.string() + " failed: " + ec.message());
  }
}

void write_series(const TimeSeries& series, const std::filesystem::path& path) {
  std::string content;
  content.reserve(series.values.size() * 20);
  for (const double value : series.values) {
    content += format_double_17(value);
    content += '\n';
  }
  atomic_write_file(path, content);
}

}  // namespace motif
