// Command-line front end: discover motifs, generate synthetic series, compare
// reports, and self-check the analytic gradients.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "motif/errors.hpp"
#include "motif/gradcheck.hpp"
#include "motif/harness.hpp"
#include "motif/report.hpp"
#include "motif/series_io.hpp"
#include "motif/synthetic.hpp"

namespace {

int run_discover(const motif::RunSpec& spec) {
  const motif::DiscoveryReport report = motif::run(spec);
  std::fprintf(stderr, "input=%s N=%zu J=%zu L=%zu stride=%zu T=%.6g\n",
               report.config.input.c_str(), report.config.series_length,
               report.config.segment_count, report.config.window_length,
               report.config.stride, report.config.threshold.value);
  for (const auto& method : report.methods) {
    std::fprintf(stderr, "  %5s: total_frequency=%lld%s%s (%.2fs)\n",
                 method.name.c_str(), static_cast<long long>(method.total_frequency),
                 method.alpha ? (" alpha=" + std::to_string(*method.alpha)).c_str() : "",
                 method.short_selection ? " [short_selection]"
                 : method.nonzero_violation ? " [nonzero_violation]"
                                            : "",
                 method.wall_seconds);
  }
  if (!spec.output.empty()) {
    std::printf("%s\n", spec.output.string().c_str());
  }
  return 0;
}

int run_synth(const motif::SynthSpec& spec, const std::string& output) {
  const motif::SyntheticSeries synth = motif::generate_synthetic(spec);
  motif::write_series(synth.series, output);

  nlohmann::ordered_json meta;
  meta["seed"] = spec.seed;
  meta["length"] = spec.length;
  meta["pattern_length"] = spec.pattern_length;
  meta["occurrences"] = spec.occurrences;
  meta["noise_sd"] = spec.noise_sd;
  meta["offsets"] = synth.offsets;
  motif::atomic_write_file(output + ".meta.json", meta.dump(2) + "\n");

  std::printf("%s\n", output.c_str());
  return 0;
}

int run_compare(const std::vector<std::string>& report_paths, const std::string& output) {
  std::vector<motif::DiscoveryReport> reports;
  reports.reserve(report_paths.size());
  for (const auto& path : report_paths) {
    reports.push_back(motif::read_report_json(path));
  }
  const std::string table = motif::compare_table(reports);
  if (output.empty()) {
    std::fputs(table.c_str(), stdout);
  } else {
    motif::atomic_write_file(output, table);
    std::printf("%s\n", output.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-series motif discovery: gradient-learned motifs vs. brute-force search"};
  app.require_subcommand(1);

  // discover
  auto* discover = app.add_subcommand("discover", "Run motif discovery on a series file");
  motif::RunSpec spec;
  std::string format = "plain";
  std::string out_format = "json";
  std::string delimiter = ",";
  std::vector<std::string> methods;
  std::vector<double> alphas;
  long long column = -1;
  double threshold = 0.0;
  double percentile = 0.0;
  discover->add_option("--input", spec.input, "Series file")->required();
  discover->add_option("--format", format, "Input format: plain|csv")
      ->check(CLI::IsMember({"plain", "csv"}));
  discover->add_option("--column", column, "CSV column index (default 0)");
  discover->add_option("--delimiter", delimiter, "CSV delimiter (default ',')");
  discover->add_option("--length", spec.window_length, "Motif/window length L")->required();
  discover->add_option("--stride", spec.stride, "Window stride (default L/2)");
  discover->add_option("--motifs", spec.motif_count, "Number of motifs K");
  auto* threshold_opt =
      discover->add_option("--threshold", threshold, "Explicit squared-distance threshold T");
  auto* percentile_opt = discover->add_option(
      "--percentile", percentile, "Derive T from this percentile of pairwise distances");
  threshold_opt->excludes(percentile_opt);
  discover->add_option("--sample-budget", spec.sample_budget,
                       "Max pairs sampled for the percentile");
  discover->add_option("--alpha", alphas, "Smoothness grid value (repeatable)");
  discover->add_option("--eta", spec.eta, "Base learning rate");
  discover->add_option("--iters", spec.iters, "Gradient ascent iterations");
  discover->add_option("--restarts", spec.restarts, "Random restarts");
  discover->add_option("--seed", spec.seed, "Base seed");
  discover->add_option("--method", methods, "Method: learn|brute (repeatable, default both)")
      ->check(CLI::IsMember({"learn", "brute"}));
  discover->add_flag("--trace", spec.trace, "Record per-iteration traces");
  discover->add_option("--threads", spec.threads, "Worker threads for restarts");
  discover->add_option("--output", spec.output, "Report path");
  discover->add_option("--output-format", out_format, "Report format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a random-walk series with implanted patterns");
  motif::SynthSpec synth_spec;
  std::string synth_output;
  synth->add_option("--length", synth_spec.length, "Series length")->required();
  synth->add_option("--pattern-length", synth_spec.pattern_length, "Implant length")->required();
  synth->add_option("--occurrences", synth_spec.occurrences, "Number of implants")->required();
  synth->add_option("--noise-sd", synth_spec.noise_sd, "Per-point implant noise sd");
  synth->add_option("--seed", synth_spec.seed, "Seed");
  synth->add_option("--output", synth_output, "Series output path (plain format)")->required();

  // compare
  auto* compare = app.add_subcommand("compare", "Tabulate learn-vs-brute totals across reports");
  std::vector<std::string> report_paths;
  std::string compare_output;
  compare->add_option("reports", report_paths, "Report JSON files");
  compare->add_option("--output", compare_output, "Table path (default stdout)");

  // gradcheck
  auto* gradcheck = app.add_subcommand("gradcheck", "Finite-difference check of the analytic gradients");
  motif::GradCheckOptions check;
  gradcheck->add_option("--instances", check.instances, "Random instances");
  gradcheck->add_option("--seed", check.seed, "Seed");
  gradcheck->add_option("--step", check.step, "Finite-difference step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (discover->parsed()) {
      spec.format = format == "csv" ? motif::SeriesFormat::Csv : motif::SeriesFormat::Plain;
      spec.output_format =
          out_format == "csv" ? motif::ReportFormat::Csv : motif::ReportFormat::Json;
      if (column >= 0) spec.column = static_cast<std::size_t>(column);
      if (delimiter.size() != 1) {
        throw motif::Error(motif::ErrorCode::ConfigError, "delimiter must be one character");
      }
      spec.delimiter = delimiter[0];
      if (!alphas.empty()) spec.alpha_grid = alphas;
      if (threshold_opt->count() > 0) spec.threshold = threshold;
      if (percentile_opt->count() > 0) spec.percentile = percentile;
      if (!methods.empty()) {
        spec.methods.clear();
        for (const auto& name : methods) {
          spec.methods.push_back(name == "learn" ? motif::Method::Learn
                                                 : motif::Method::Brute);
        }
      }
      return run_discover(spec);
    }
    if (synth->parsed()) {
      return run_synth(synth_spec, synth_output);
    }
    if (compare->parsed()) {
      return run_compare(report_paths, compare_output);
    }
    if (gradcheck->parsed()) {
      const motif::GradCheckReport report = motif::run_gradient_check(check);
      std::printf("%s\n", report.summary().c_str());
      return report.pass ? 0 : 3;
    }
  } catch (const motif::Error& err) {
    std::fprintf(stderr, "error [%s]: %s\n", motif::error_code_name(err.code()), err.what());
    return motif::exit_code_for(err.code());
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 2;
  }
  return 0;
}
