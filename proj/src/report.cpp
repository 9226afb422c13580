#include "motif/report.hpp"

#include <fstream>

#include "json.hpp"
#include "motif/errors.hpp"
#include "motif/series_io.hpp"

namespace motif {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix& matrix) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < matrix.rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < matrix.cols; ++c) row.push_back(matrix(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& rows) {
  Matrix matrix;
  matrix.rows = rows.size();
  matrix.cols = matrix.rows == 0 ? 0 : rows.front().size();
  matrix.data.reserve(matrix.rows * matrix.cols);
  for (const auto& row : rows) {
    for (const auto& value : row) matrix.data.push_back(value.get<double>());
  }
  return matrix;
}

Json config_to_json(const ResolvedConfig& config) {
  Json json;
  json["input"] = config.input;
  json["format"] = config.format;
  if (config.column) {
    json["column"] = *config.column;
  } else {
    json["column"] = nullptr;
  }
  json["delimiter"] = std::string(1, config.delimiter);
  json["series_length"] = config.series_length;
  json["window_length"] = config.window_length;
  json["stride"] = config.stride;
  json["segment_count"] = config.segment_count;
  json["motif_count"] = config.motif_count;
  Json threshold;
  threshold["value"] = config.threshold.value;
  if (config.threshold.percentile) {
    threshold["percentile"] = *config.threshold.percentile;
  } else {
    threshold["percentile"] = nullptr;
  }
  threshold["sampled_pairs"] = config.threshold.sampled_pairs;
  threshold["sample_budget"] = config.sample_budget;
  json["threshold"] = std::move(threshold);
  json["alpha_grid"] = config.alpha_grid;
  json["eta"] = config.eta;
  json["iters"] = config.iters;
  json["restarts"] = config.restarts;
  json["seed"] = config.seed;
  json["methods"] = config.methods;
  json["trace"] = config.trace;
  return json;
}

ResolvedConfig config_from_json(const Json& json) {
  ResolvedConfig config;
  config.input = json.at("input").get<std::string>();
  config.format = json.at("format").get<std::string>();
  if (!json.at("column").is_null()) config.column = json.at("column").get<std::size_t>();
  config.delimiter = json.at("delimiter").get<std::string>().at(0);
  config.series_length = json.at("series_length").get<std::size_t>();
  config.window_length = json.at("window_length").get<std::size_t>();
  config.stride = json.at("stride").get<std::size_t>();
  config.segment_count = json.at("segment_count").get<std::size_t>();
  config.motif_count = json.at("motif_count").get<std::size_t>();
  const auto& threshold = json.at("threshold");
  config.threshold.value = threshold.at("value").get<double>();
  if (!threshold.at("percentile").is_null()) {
    config.threshold.percentile = threshold.at("percentile").get<double>();
  }
  config.threshold.sampled_pairs = threshold.at("sampled_pairs").get<std::size_t>();
  config.sample_budget = threshold.at("sample_budget").get<std::size_t>();
  config.alpha_grid = json.at("alpha_grid").get<std::vector<double>>();
  config.eta = json.at("eta").get<double>();
  config.iters = json.at("iters").get<std::size_t>();
  config.restarts = json.at("restarts").get<std::size_t>();
  config.seed = json.at("seed").get<std::uint64_t>();
  config.methods = json.at("methods").get<std::vector<std::string>>();
  config.trace = json.at("trace").get<bool>();
  return config;
}

Json method_to_json(const MethodResult& method) {
  Json json;
  json["name"] = method.name;
  json["motifs"] = matrix_to_json(method.motifs);
  json["frequencies"] = method.frequencies;
  json["total_frequency"] = method.total_frequency;
  json["matches"] = method.matches;
  if (method.alpha) json["alpha"] = *method.alpha;
  if (method.restart_index) json["restart_index"] = *method.restart_index;
  if (!method.origin_segments.empty()) json["origin_segments"] = method.origin_segments;
  json["hard_violation"] = method.hard_violation;
  Json flags;
  flags["short_selection"] = method.short_selection;
  flags["nonzero_violation"] = method.nonzero_violation;
  json["flags"] = std::move(flags);
  if (method.trace) {
    Json trace;
    trace["objective"] = method.trace->objective;
    trace["smooth_frequency"] = method.trace->smooth_frequency;
    trace["smooth_violation"] = method.trace->smooth_violation;
    json["trace"] = std::move(trace);
  }
  return json;
}

MethodResult method_from_json(const Json& json) {
  MethodResult method;
  method.name = json.at("name").get<std::string>();
  method.motifs = matrix_from_json(json.at("motifs"));
  method.frequencies = json.at("frequencies").get<std::vector<std::int64_t>>();
  method.total_frequency = json.at("total_frequency").get<std::int64_t>();
  method.matches = json.at("matches").get<std::vector<std::vector<std::size_t>>>();
  if (json.contains("alpha")) method.alpha = json.at("alpha").get<double>();
  if (json.contains("restart_index")) {
    method.restart_index = json.at("restart_index").get<std::size_t>();
  }
  if (json.contains("origin_segments")) {
    method.origin_segments = json.at("origin_segments").get<std::vector<std::size_t>>();
  }
  method.hard_violation = json.at("hard_violation").get<double>();
  method.short_selection = json.at("flags").at("short_selection").get<bool>();
  method.nonzero_violation = json.at("flags").at("nonzero_violation").get<bool>();
  if (json.contains("trace")) {
    LearnTraces traces;
    traces.objective = json.at("trace").at("objective").get<std::vector<double>>();
    traces.smooth_frequency =
        json.at("trace").at("smooth_frequency").get<std::vector<double>>();
    traces.smooth_violation =
        json.at("trace").at("smooth_violation").get<std::vector<double>>();
    method.trace = std::move(traces);
  }
  return method;
}

std::filesystem::path sibling_motifs_path(const std::filesystem::path& path) {
  std::filesystem::path sibling = path;
  sibling.replace_filename(path.stem().string() + "_motifs" + path.extension().string());
  return sibling;
}

}  // namespace

void write_report(const DiscoveryReport& report, const std::filesystem::path& path,
                  ReportFormat format) {
  if (format == ReportFormat::Json) {
    Json json;
    json["config"] = config_to_json(report.config);
    Json methods = Json::array();
    for (const auto& method : report.methods) methods.push_back(method_to_json(method));
    json["methods"] = std::move(methods);
    atomic_write_file(path, json.dump(2) + "\n");
    return;
  }

  std::string table = "method,motif_index,frequency\n";
  std::string motifs = "method,motif_index,values...\n";
  for (const auto& method : report.methods) {
    for (std::size_t k = 0; k < method.frequencies.size(); ++k) {
      table += method.name + "," + std::to_string(k) + "," +
               std::to_string(method.frequencies[k]) + "\n";
      motifs += method.name + "," + std::to_string(k);
      for (std::size_t l = 0; l < method.motifs.cols; ++l) {
        motifs += "," + format_double_17(method.motifs(k, l));
      }
      motifs += "\n";
    }
  }
  atomic_write_file(path, table);
  atomic_write_file(sibling_motifs_path(path), motifs);
}

DiscoveryReport read_report_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::FileNotFound, "cannot open report " + path.string());
  }
  Json json;
  try {
    in >> json;
  } catch (const Json::parse_error& err) {
    throw Error(ErrorCode::ParseError,
                "invalid report JSON in " + path.string() + ": " + err.what());
  }

  DiscoveryReport report;
  try {
    report.config = config_from_json(json.at("config"));
    for (const auto& method : json.at("methods")) {
      report.methods.push_back(method_from_json(method));
    }
  } catch (const Json::exception& err) {
    throw Error(ErrorCode::ParseError,
                "unexpected report structure in " + path.string() + ": " + err.what());
  }
  return report;
}

}  // namespace motif
