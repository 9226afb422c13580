#include "motif/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "motif/brute_search.hpp"
#include "motif/errors.hpp"
#include "motif/learner.hpp"
#include "motif/segmentation.hpp"

namespace motif {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string method_name(Method method) {
  return method == Method::Learn ? "learn" : "brute";
}

void validate(const RunSpec& spec) {
  if (spec.window_length == 0) {
    throw Error(ErrorCode::ConfigError, "window length is required");
  }
  if (spec.motif_count == 0) {
    throw Error(ErrorCode::ConfigError, "motif count must be >= 1");
  }
  if (spec.threshold && spec.percentile) {
    throw Error(ErrorCode::ConfigError,
                "explicit threshold and percentile are mutually exclusive");
  }
  if (!spec.threshold && !spec.percentile) {
    throw Error(ErrorCode::ConfigError, "either a threshold or a percentile is required");
  }
  if (spec.threshold && !(*spec.threshold > 0.0)) {
    throw Error(ErrorCode::ConfigError, "threshold must be positive");
  }
  if (spec.methods.empty()) {
    throw Error(ErrorCode::ConfigError, "at least one method must be selected");
  }
  if (spec.alpha_grid.empty()) {
    throw Error(ErrorCode::ConfigError, "alpha grid must not be empty");
  }
  for (const double alpha : spec.alpha_grid) {
    if (!(alpha > 0.0)) throw Error(ErrorCode::ConfigError, "alpha values must be positive");
  }
}

MethodResult evaluate_brute(const SegmentMatrix& segments, const Threshold& threshold,
                            std::size_t motif_count) {
  const auto start = std::chrono::steady_clock::now();
  const BruteResult search = brute_force_search(segments, threshold, motif_count);

  MethodResult method;
  method.name = "brute";
  method.motifs = search.motifs.data;
  method.frequencies = search.hard.per_motif;
  method.total_frequency = search.hard.total;
  method.matches = search.hard.matches;
  method.short_selection = search.short_selection;
  method.origin_segments = search.selected;
  method.hard_violation = hard_violation(search.motifs, threshold);
  method.wall_seconds = seconds_since(start);
  return method;
}

MethodResult evaluate_learn(const SegmentMatrix& segments, const Threshold& threshold,
                            const RunSpec& spec) {
  const auto start = std::chrono::steady_clock::now();

  std::vector<double> grid = spec.alpha_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  LearnConfig config;
  config.threshold = threshold;
  config.motif_count = spec.motif_count;
  config.motif_length = spec.window_length;
  config.eta = spec.eta;
  config.iters = spec.iters;
  config.restarts = spec.restarts;
  config.seed = spec.seed;
  config.trace = spec.trace;

  std::optional<RestartSelection> best;
  double best_alpha = grid.front();
  for (const double alpha : grid) {
    config.alpha = alpha;
    RestartSelection candidate = learn_with_restarts(segments, config, spec.threads);
    // Ascending grid + strict improvement = smaller alpha wins ties.
    if (!best || candidate.result.hard.total > best->result.hard.total) {
      best = std::move(candidate);
      best_alpha = alpha;
    }
  }

  MethodResult method;
  method.name = "learn";
  method.motifs = best->result.motifs.data;
  method.frequencies = best->result.hard.per_motif;
  method.total_frequency = best->result.hard.total;
  method.matches = best->result.hard.matches;
  method.trace = best->result.traces;
  method.nonzero_violation = best->nonzero_violation;
  method.alpha = best_alpha;
  method.restart_index = best->result.restart_index;
  method.origin_segments = best->result.init_segment_indices;
  method.hard_violation = best->result.hard_violation_final;
  method.wall_seconds = seconds_since(start);
  return method;
}

}  // namespace

DiscoveryReport run(const RunSpec& spec) {
  validate(spec);

  const TimeSeries series = load_series(spec.input, spec.format, spec.column, spec.delimiter);
  const std::size_t stride = spec.stride.value_or(std::max<std::size_t>(1, spec.window_length / 2));
  const SegmentMatrix segments = extract_segments(series, spec.window_length, stride);

  const Threshold threshold =
      spec.threshold ? Threshold{*spec.threshold, std::nullopt, 0}
                     : percentile_threshold(segments, *spec.percentile,
                                            spec.sample_budget, spec.seed);

  DiscoveryReport report;
  report.config.input = spec.input.string();
  report.config.format = spec.format == SeriesFormat::Plain ? "plain" : "csv";
  report.config.column = spec.column;
  report.config.delimiter = spec.delimiter;
  report.config.series_length = series.values.size();
  report.config.window_length = spec.window_length;
  report.config.stride = stride;
  report.config.segment_count = segments.count();
  report.config.motif_count = spec.motif_count;
  report.config.threshold = threshold;
  report.config.sample_budget = spec.sample_budget;
  report.config.alpha_grid = spec.alpha_grid;
  report.config.eta = spec.eta;
  report.config.iters = spec.iters;
  report.config.restarts = spec.restarts;
  report.config.seed = spec.seed;
  report.config.trace = spec.trace;

  // Deduplicate while keeping the caller's order; both methods score against
  // the same segment matrix and threshold.
  std::vector<Method> methods;
  for (const Method method : spec.methods) {
    if (std::find(methods.begin(), methods.end(), method) == methods.end()) {
      methods.push_back(method);
    }
  }
  for (const Method method : methods) {
    report.config.methods.push_back(method_name(method));
    if (method == Method::Brute) {
      report.methods.push_back(evaluate_brute(segments, threshold, spec.motif_count));
    } else {
      report.methods.push_back(evaluate_learn(segments, threshold, spec));
    }
  }

  if (!spec.output.empty()) {
    write_report(report, spec.output, spec.output_format);
  }
  return report;
}

std::string compare_table(const std::vector<DiscoveryReport>& reports) {
  std::ostringstream out;
  out << "dataset,k,l,pct,brute_total,learn_total,winner,rel_improvement\n";
  if (reports.empty()) return out.str();

  std::size_t learn_wins = 0;
  std::size_t brute_wins = 0;
  std::size_t ties = 0;
  std::vector<double> improvements;

  for (const auto& report : reports) {
    const MethodResult* learn = nullptr;
    const MethodResult* brute = nullptr;
    for (const auto& method : report.methods) {
      if (method.name == "learn") learn = &method;
      if (method.name == "brute") brute = &method;
    }
    if (!learn || !brute) {
      throw Error(ErrorCode::MissingMethod,
                  "comparison needs both methods in report for " + report.config.input);
    }

    const auto lm = learn->total_frequency;
    const auto bfm = brute->total_frequency;
    const double improvement =
        bfm == 0 ? 0.0 : static_cast<double>(lm - bfm) / static_cast<double>(bfm);
    std::string winner = "tie";
    if (lm > bfm) {
      winner = "learn";
      ++learn_wins;
    } else if (bfm > lm) {
      winner = "brute";
      ++brute_wins;
    } else {
      ++ties;
    }
    improvements.push_back(improvement);

    out << report.config.input << ',' << report.config.motif_count << ','
        << report.config.window_length << ',';
    if (report.config.threshold.percentile) {
      out << *report.config.threshold.percentile;
    }
    out << ',' << bfm << ',' << lm << ',' << winner << ',' << improvement << "\n";
  }

  double mean = 0.0;
  double sd = 0.0;
  if (!improvements.empty()) {
    for (const double v : improvements) mean += v;
    mean /= static_cast<double>(improvements.size());
    for (const double v : improvements) sd += (v - mean) * (v - mean);
    sd = std::sqrt(sd / static_cast<double>(improvements.size()));
  }
  // Win counts sit under their method's total column; improvement column
  // carries mean+-sd.
  out << "summary,,,," << brute_wins << ',' << learn_wins << ',' << "ties=" << ties
      << ',' << mean << "+-" << sd << "\n";
  return out.str();
}

}  // namespace motif
