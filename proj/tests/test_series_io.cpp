#include <cmath>
#include <random>

#include "doctest.h"
#include "motif/errors.hpp"
#include "motif/report.hpp"
#include "motif/series_io.hpp"
#include "test_util.hpp"

using motif::Error;
using motif::ErrorCode;
using motif::SeriesFormat;

namespace {

motif::DiscoveryReport sample_report() {
  motif::DiscoveryReport report;
  report.config.input = "sample.txt";
  report.config.format = "plain";
  report.config.delimiter = ',';
  report.config.series_length = 10;
  report.config.window_length = 2;
  report.config.stride = 1;
  report.config.segment_count = 9;
  report.config.motif_count = 2;
  report.config.threshold = motif::Threshold{0.75, 1.0, 36};
  report.config.sample_budget = 1000;
  report.config.alpha_grid = {1.0, 2.0, 3.0};
  report.config.eta = 0.1;
  report.config.iters = 5;
  report.config.restarts = 2;
  report.config.seed = 7;
  report.config.methods = {"learn", "brute"};

  motif::MethodResult learn;
  learn.name = "learn";
  learn.motifs = motif::Matrix(2, 2);
  learn.motifs(0, 0) = 0.125;
  learn.motifs(0, 1) = -0.5;
  learn.motifs(1, 0) = 1.0 / 3.0;
  learn.motifs(1, 1) = 2.25;
  learn.frequencies = {3, 2};
  learn.total_frequency = 5;
  learn.matches = {{0, 2, 5}, {1, 7}};
  learn.alpha = 2.0;
  learn.restart_index = 1;
  motif::LearnTraces traces;
  traces.objective = {0.1, 0.2, 0.25};
  traces.smooth_frequency = {0.3, 0.35, 0.4};
  traces.smooth_violation = {0.2, 0.15, 0.15};
  learn.trace = traces;
  report.methods.push_back(learn);

  motif::MethodResult brute;
  brute.name = "brute";
  brute.motifs = motif::Matrix(2, 2);
  brute.motifs(0, 0) = -1.0;
  brute.motifs(0, 1) = 1.0;
  brute.frequencies = {2, 1};
  brute.total_frequency = 3;
  brute.matches = {{0, 4}, {8}};
  brute.origin_segments = {0, 8};
  report.methods.push_back(brute);
  return report;
}

}  // namespace

TEST_CASE("plain format parses values in file order") {
  const auto path = testutil::scratch_file("plain_basic.txt");
  testutil::write_text(path, "1.0\n2.0\n3.0");
  const auto series = motif::load_series(path, SeriesFormat::Plain);
  CHECK(series.values == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("plain format accepts several values per line") {
  const auto path = testutil::scratch_file("plain_multi.txt");
  testutil::write_text(path, "1 2\t3\n4\n");
  const auto series = motif::load_series(path, SeriesFormat::Plain);
  CHECK(series.values == std::vector<double>{1.0, 2.0, 3.0, 4.0});
}

TEST_CASE("csv header row is skipped and the column selected") {
  const auto path = testutil::scratch_file("csv_header.csv");
  testutil::write_text(path, "t,v\n0,5.5\n1,6.5\n");
  const auto series = motif::load_series(path, SeriesFormat::Csv, 1);
  CHECK(series.values == std::vector<double>{5.5, 6.5});
}

TEST_CASE("csv without header keeps the first row") {
  const auto path = testutil::scratch_file("csv_noheader.csv");
  testutil::write_text(path, "0,5.5\n1,6.5\n");
  const auto series = motif::load_series(path, SeriesFormat::Csv, 1);
  CHECK(series.values == std::vector<double>{5.5, 6.5});
}

TEST_CASE("csv respects a custom delimiter") {
  const auto path = testutil::scratch_file("csv_semicolon.csv");
  testutil::write_text(path, "a;b\n1;2\n3;4\n");
  const auto series = motif::load_series(path, SeriesFormat::Csv, 0, ';');
  CHECK(series.values == std::vector<double>{1.0, 3.0});
}

TEST_CASE("parse error reports the line number") {
  const auto path = testutil::scratch_file("plain_bad.txt");
  testutil::write_text(path, "1.0\nabc\n3.0");
  try {
    motif::load_series(path, SeriesFormat::Plain);
    FAIL("expected ParseError");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ParseError);
    CHECK(std::string(err.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("nan and inf are parse errors, not values") {
  const auto path = testutil::scratch_file("plain_nan.txt");
  testutil::write_text(path, "1.0\nnan\n");
  CHECK_THROWS_AS(motif::load_series(path, SeriesFormat::Plain), Error);
  testutil::write_text(path, "inf\n");
  try {
    motif::load_series(path, SeriesFormat::Plain);
    FAIL("expected ParseError");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("missing csv column is a parse error with the line number") {
  const auto path = testutil::scratch_file("csv_short_row.csv");
  testutil::write_text(path, "a,b\n1,2\n3\n");
  try {
    motif::load_series(path, SeriesFormat::Csv, 1);
    FAIL("expected ParseError");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ParseError);
    CHECK(std::string(err.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("empty input is EmptySeries") {
  const auto path = testutil::scratch_file("plain_empty.txt");
  testutil::write_text(path, "\n\n");
  try {
    motif::load_series(path, SeriesFormat::Plain);
    FAIL("expected EmptySeries");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::EmptySeries);
  }
}

TEST_CASE("missing file is FileNotFound") {
  try {
    motif::load_series(testutil::scratch_file("does_not_exist.txt"), SeriesFormat::Plain);
    FAIL("expected FileNotFound");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::FileNotFound);
  }
}

TEST_CASE("series round-trips exactly through write and load") {
  std::mt19937_64 rng(123);
  std::normal_distribution<double> gauss(0.0, 100.0);
  motif::TimeSeries series;
  for (int i = 0; i < 500; ++i) series.values.push_back(gauss(rng));
  series.values.push_back(1e-300);
  series.values.push_back(-0.1);
  series.values.push_back(12345678901234567.0);

  const auto path = testutil::scratch_file("roundtrip.txt");
  motif::write_series(series, path);
  const auto loaded = motif::load_series(path, SeriesFormat::Plain);
  REQUIRE(loaded.values.size() == series.values.size());
  for (std::size_t i = 0; i < series.values.size(); ++i) {
    CHECK(loaded.values[i] == series.values[i]);  // bit-exact
  }

  // A second write of the same data is byte-identical.
  const auto path2 = testutil::scratch_file("roundtrip2.txt");
  motif::write_series(series, path2);
  CHECK(testutil::read_text(path) == testutil::read_text(path2));
}

TEST_CASE("json report carries the schema keys and round-trips") {
  const auto report = sample_report();
  const auto path = testutil::scratch_file("report.json");
  motif::write_report(report, path, motif::ReportFormat::Json);

  const std::string text = testutil::read_text(path);
  for (const char* key : {"\"config\"", "\"methods\"", "\"name\"", "\"motifs\"",
                          "\"frequencies\"", "\"total_frequency\"", "\"matches\""}) {
    CHECK(text.find(key) != std::string::npos);
  }

  const auto loaded = motif::read_report_json(path);
  REQUIRE(loaded.methods.size() == 2);
  CHECK(loaded.methods[0].name == "learn");
  CHECK(loaded.methods[0].motifs == report.methods[0].motifs);
  CHECK(loaded.methods[0].frequencies == report.methods[0].frequencies);
  CHECK(loaded.methods[0].matches == report.methods[0].matches);
  CHECK(loaded.methods[1].total_frequency == 3);
  CHECK(loaded.config.motif_count == 2);
  CHECK(loaded.config.threshold.value == report.config.threshold.value);
  CHECK(loaded.config.threshold.percentile == report.config.threshold.percentile);
  REQUIRE(loaded.methods[0].trace.has_value());
  CHECK(loaded.methods[0].trace->objective == report.methods[0].trace->objective);
  CHECK(loaded.methods[0].trace->smooth_violation ==
        report.methods[0].trace->smooth_violation);
}

TEST_CASE("identical reports serialize to identical bytes") {
  const auto report = sample_report();
  const auto path_a = testutil::scratch_file("report_a.json");
  const auto path_b = testutil::scratch_file("report_b.json");
  motif::write_report(report, path_a, motif::ReportFormat::Json);
  motif::write_report(report, path_b, motif::ReportFormat::Json);
  CHECK(testutil::read_text(path_a) == testutil::read_text(path_b));
}

TEST_CASE("csv report writes the flat table plus the motif sibling") {
  const auto report = sample_report();
  const auto path = testutil::scratch_file("report.csv");
  motif::write_report(report, path, motif::ReportFormat::Csv);

  const std::string table = testutil::read_text(path);
  CHECK(table.find("method,motif_index,frequency") == 0);
  CHECK(table.find("learn,0,3") != std::string::npos);
  CHECK(table.find("brute,1,1") != std::string::npos);

  const std::string motifs = testutil::read_text(testutil::scratch_file("report_motifs.csv"));
  CHECK(motifs.find("learn,0,0.125,-0.5") != std::string::npos);
  CHECK(motifs.find("brute,0,-1,1") != std::string::npos);
}

TEST_CASE("failed writes leave the original file untouched") {
  const auto target = testutil::scratch_dir() / "report_dir";
  std::filesystem::create_directories(target);
  const auto report = sample_report();
  try {
    motif::write_report(report, target, motif::ReportFormat::Json);
    FAIL("expected IoError");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::IoError);
  }
  CHECK(std::filesystem::is_directory(target));  // untouched

  const auto unwritable = std::filesystem::path("/nonexistent_dir_motif/report.json");
  CHECK_THROWS_AS(motif::write_report(report, unwritable, motif::ReportFormat::Json), Error);
}
