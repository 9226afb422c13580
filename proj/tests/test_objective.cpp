#include <cmath>
#include <random>

#include "doctest.h"
#include "motif/errors.hpp"
#include "motif/objective.hpp"
#include "oracles.hpp"

using motif::Error;
using motif::ErrorCode;
using motif::Matrix;
using motif::MotifSet;
using motif::SegmentMatrix;
using motif::Threshold;

namespace {

MotifSet make_motifs(const oracle::Rows& rows) {
  MotifSet motifs;
  motifs.data = Matrix(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) motifs.data(r, c) = rows[r][c];
  return motifs;
}

SegmentMatrix make_segments(const oracle::Rows& rows) {
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return SegmentMatrix::from_rows(std::move(m));
}

constexpr double kT1 = 1.0;

}  // namespace

TEST_CASE("a squared distance exactly at T is not a match") {
  const auto motifs = make_motifs({{0.0}});
  const auto segments = make_segments({{1.0}});  // distance 1 == T
  const auto report = motif::hard_frequency(motifs, segments, Threshold{kT1});
  CHECK(report.per_motif == std::vector<std::int64_t>{0});
  CHECK(report.total == 0);
  CHECK(report.matches[0].empty());
}

TEST_CASE("trivial-match fencing counts gap-2 matches and skips gap-1") {
  // Matches at segments 1, 2 and 4: index 1 counted, 2 adjacent to 1, 4 two
  // past the skipped 2.
  const auto motifs = make_motifs({{0.0}});
  const auto segments = make_segments({{10.0}, {0.0}, {0.0}, {10.0}, {0.0}});
  const auto report = motif::hard_frequency(motifs, segments, Threshold{0.5});
  CHECK(report.per_motif == std::vector<std::int64_t>{2});
  CHECK(report.matches[0] == std::vector<std::size_t>{1, 4});
}

TEST_CASE("a motif equal to the single segment counts itself") {
  const auto motifs = make_motifs({{0.25, -0.5}});
  const auto segments = make_segments({{0.25, -0.5}});
  const auto report = motif::hard_frequency(motifs, segments, Threshold{0.1});
  CHECK(report.total == 1);
}

TEST_CASE("hard_frequency matches the naive oracle on random instances") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = oracle::random_instance(rng, 4, 64, 8);
    const auto report = motif::hard_frequency(make_motifs(inst.motifs),
                                              make_segments(inst.segments),
                                              Threshold{inst.threshold});
    std::int64_t expected_total = 0;
    for (std::size_t k = 0; k < inst.motifs.size(); ++k) {
      std::vector<std::size_t> counted;
      const auto expected =
          oracle::nontrivial_count(inst.motifs[k], inst.segments, inst.threshold, &counted);
      CHECK(report.per_motif[k] == expected);
      CHECK(report.matches[k] == counted);
      expected_total += expected;
    }
    CHECK(report.total == expected_total);
  }
}

TEST_CASE("hard_frequency rejects mismatched lengths") {
  const auto motifs = make_motifs({{0.0, 1.0}});
  const auto segments = make_segments({{1.0}});
  CHECK_THROWS_AS(motif::hard_frequency(motifs, segments, Threshold{kT1}), Error);
}

TEST_CASE("smooth_frequency evaluates the kernel exactly") {
  const auto motifs = make_motifs({{0.0}});
  const auto segments = make_segments({{0.0}, {1.0}});
  const auto profile = motif::smooth_frequency(motifs, segments, Threshold{kT1}, 2.0);
  CHECK(profile.per_pair(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(profile.per_pair(0, 1) == doctest::Approx(0.13533528323661270).epsilon(1e-12));
  CHECK(profile.total_smooth == doctest::Approx(0.56766764161830635).epsilon(1e-12));
}

TEST_CASE("an exact copy scores 1 and everything stays in (0,1]") {
  const auto motifs = make_motifs({{1.5, -2.0}});
  const auto segments = make_segments({{1.5, -2.0}, {0.0, 0.0}, {3.0, 1.0}});
  const auto profile = motif::smooth_frequency(motifs, segments, Threshold{2.0}, 1.0);
  CHECK(profile.per_pair(0, 0) == 1.0);
  for (const double score : profile.per_pair.data) {
    CHECK(score > 0.0);
    CHECK(score <= 1.0);
    CHECK((score == 1.0) == (score == profile.per_pair(0, 0)));
  }
  CHECK(profile.total_smooth > 0.0);
  CHECK(profile.total_smooth <= 1.0);
}

TEST_CASE("smooth_frequency requires a positive threshold") {
  const auto motifs = make_motifs({{0.0}});
  const auto segments = make_segments({{1.0}});
  try {
    motif::smooth_frequency(motifs, segments, Threshold{0.0}, 1.0);
    FAIL("expected InvalidThreshold");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::InvalidThreshold);
  }
}

TEST_CASE("match scores separate matching from non-matching pairs more as alpha grows") {
  const auto motifs = make_motifs({{0.0}});
  // Squared distances 0.25 (match, below T(1-eps)) and 2.25 (non-match).
  const auto segments = make_segments({{0.5}, {1.5}});
  double previous_ratio = 0.0;
  for (const double alpha : {1.0, 2.0, 4.0, 8.0}) {
    const auto profile = motif::smooth_frequency(motifs, segments, Threshold{kT1}, alpha);
    const double matching = profile.per_pair(0, 0);
    const double non_matching = profile.per_pair(0, 1);
    CHECK(matching > non_matching);
    const double ratio = matching / non_matching;
    CHECK(ratio > previous_ratio);
    previous_ratio = ratio;
  }
}

TEST_CASE("pairwise distances: single motif, 3-4-5, and the naive oracle") {
  CHECK(motif::pairwise_motif_distances(make_motifs({{1.0, 2.0}})).phi ==
        Matrix(1, 1, 0.0));

  const auto phi = motif::pairwise_motif_distances(make_motifs({{0.0, 0.0}, {3.0, 4.0}}));
  CHECK(phi.phi(0, 1) == 25.0);
  CHECK(phi.phi(1, 0) == 25.0);
  CHECK(phi.phi(0, 0) == 0.0);

  std::mt19937_64 rng(77);
  const auto inst = oracle::random_instance(rng);
  const auto distances = motif::pairwise_motif_distances(make_motifs(inst.motifs));
  for (std::size_t k = 0; k < inst.motifs.size(); ++k) {
    for (std::size_t q = 0; q < inst.motifs.size(); ++q) {
      CHECK(distances.phi(k, q) == oracle::sqdist(inst.motifs[k], inst.motifs[q]));
    }
  }
}

TEST_CASE("hard violation hits its landmark values") {
  // Identical motifs: phi = 0, prefactor 2/(K(K-1)) = 1.
  CHECK(motif::hard_violation(make_motifs({{1.0, 2.0}, {1.0, 2.0}}), Threshold{kT1}) == 1.0);
  // phi = 2T sits exactly on the inactive boundary.
  CHECK(motif::hard_violation(make_motifs({{0.0}, {1.0}}), Threshold{0.5}) == 0.0);
  // phi = T halves the penalty.
  CHECK(motif::hard_violation(make_motifs({{0.0}, {1.0}}), Threshold{kT1}) == 0.5);
  // Single motif: defined as zero.
  CHECK(motif::hard_violation(make_motifs({{4.0}}), Threshold{kT1}) == 0.0);
}

TEST_CASE("smooth violation squares the per-pair penalty") {
  CHECK(motif::smooth_violation(make_motifs({{1.0, 2.0}, {1.0, 2.0}}), Threshold{kT1}) == 1.0);
  CHECK(motif::smooth_violation(make_motifs({{0.0}, {1.0}}), Threshold{kT1}) == 0.25);
  // All pairs at or beyond 2T: inactive.
  CHECK(motif::smooth_violation(make_motifs({{0.0}, {10.0}, {-10.0}}), Threshold{kT1}) == 0.0);
}

TEST_CASE("objective is smooth frequency minus smooth violation") {
  const auto motifs = make_motifs({{0.0}});
  const auto segments = make_segments({{0.5}, {2.0}});
  const auto profile = motif::smooth_frequency(motifs, segments, Threshold{kT1}, 2.0);
  CHECK(motif::objective(motifs, segments, Threshold{kT1}, 2.0) ==
        doctest::Approx(profile.total_smooth).epsilon(1e-15));

  // Two identical motifs far from every segment approach the -1 limit
  // (the kernel underflows to zero at this distance).
  const auto twin = make_motifs({{100.0}, {100.0}});
  const double value = motif::objective(twin, segments, Threshold{kT1}, 2.0);
  CHECK(value == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("grad_frequency vanishes on an exact copy and matches the hand value") {
  const auto segments = make_segments({{0.0}});
  const auto zero = motif::grad_frequency(make_motifs({{0.0}}), segments, Threshold{kT1}, 1.0);
  CHECK(zero(0, 0) == 0.0);

  // K=J=L=1, M=1, S=0, T=1, alpha=1: -2 * e^-1.
  const auto grad = motif::grad_frequency(make_motifs({{1.0}}), segments, Threshold{kT1}, 1.0);
  CHECK(grad(0, 0) == doctest::Approx(-0.73575888234288467).epsilon(1e-12));
}

TEST_CASE("grad_violation is zero when inactive and matches the hand value") {
  const auto inactive =
      motif::grad_violation(make_motifs({{0.0}, {10.0}}), Threshold{kT1});
  CHECK(inactive(0, 0) == 0.0);
  CHECK(inactive(1, 0) == 0.0);

  // K=2, L=1, M = {0, 1}, T=1: (phi-2T)(M0-M1)/T^2 = (1-2)(0-1) = 1.
  const auto grad = motif::grad_violation(make_motifs({{0.0}, {1.0}}), Threshold{kT1});
  CHECK(grad(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(grad(1, 0) == doctest::Approx(-1.0).epsilon(1e-15));

  const auto single = motif::grad_violation(make_motifs({{3.0, 4.0}}), Threshold{kT1});
  CHECK(single == Matrix(1, 2, 0.0));
}

TEST_CASE("analytic gradients match central finite differences") {
  std::mt19937_64 rng(424242);
  const double step = 1e-5;
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = oracle::random_instance(rng);
    auto motifs = make_motifs(inst.motifs);
    const auto segments = make_segments(inst.segments);
    const Threshold threshold{inst.threshold};

    const Matrix freq_grad = motif::grad_frequency(motifs, segments, threshold, inst.alpha);
    const Matrix viol_grad = motif::grad_violation(motifs, threshold);
    const Matrix obj_grad = motif::grad_objective(motifs, segments, threshold, inst.alpha);

    for (std::size_t i = 0; i < motifs.data.data.size(); ++i) {
      auto probe = [&](auto&& evaluate) {
        return oracle::central_diff(
            [&](double x) {
              const double saved = motifs.data.data[i];
              motifs.data.data[i] = x;
              const double value = evaluate();
              motifs.data.data[i] = saved;
              return value;
            },
            motifs.data.data[i], step);
      };
      const double fd_freq = probe([&] {
        return motif::smooth_frequency(motifs, segments, threshold, inst.alpha).total_smooth;
      });
      const double fd_viol = probe([&] { return motif::smooth_violation(motifs, threshold); });
      const double fd_obj = probe([&] {
        return motif::objective(motifs, segments, threshold, inst.alpha);
      });

      CHECK(oracle::grad_entry_ok(freq_grad.data[i], fd_freq, 1e-4, 1e-8, 1e-6));
      CHECK(oracle::grad_entry_ok(viol_grad.data[i], fd_viol, 1e-4, 1e-8, 1e-6));
      CHECK(oracle::grad_entry_ok(obj_grad.data[i], fd_obj, 1e-4, 1e-8, 1e-6));
    }

    // Objective gradient is the componentwise difference of the two parts.
    for (std::size_t i = 0; i < obj_grad.data.size(); ++i) {
      CHECK(obj_grad.data[i] ==
            doctest::Approx(freq_grad.data[i] - viol_grad.data[i]).epsilon(1e-15));
    }
  }
}

TEST_CASE("single-motif objective gradient reduces to the frequency gradient") {
  std::mt19937_64 rng(11);
  const auto inst = oracle::random_instance(rng, 1, 6, 8);
  const auto motifs = make_motifs(inst.motifs);
  const auto segments = make_segments(inst.segments);
  const auto freq = motif::grad_frequency(motifs, segments, Threshold{inst.threshold}, inst.alpha);
  const auto obj = motif::grad_objective(motifs, segments, Threshold{inst.threshold}, inst.alpha);
  CHECK(freq == obj);
}

TEST_CASE("ranges hold across random instances") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = oracle::random_instance(rng);
    const auto motifs = make_motifs(inst.motifs);
    const auto segments = make_segments(inst.segments);
    const Threshold threshold{inst.threshold};

    const double freq = motif::smooth_frequency(motifs, segments, threshold, inst.alpha).total_smooth;
    const double viol = motif::smooth_violation(motifs, threshold);
    const double obj = motif::objective(motifs, segments, threshold, inst.alpha);
    CHECK(freq > 0.0);
    CHECK(freq <= 1.0);
    CHECK(viol >= 0.0);
    CHECK(viol <= 1.0);
    CHECK(obj > -1.0);
    CHECK(obj <= 1.0);
    CHECK(obj == doctest::Approx(freq - viol).epsilon(1e-15));

    // Hard violation is zero exactly when every pair is at least 2T apart.
    const auto distances = motif::pairwise_motif_distances(motifs);
    bool all_apart = true;
    for (std::size_t k = 0; k < motifs.count(); ++k)
      for (std::size_t p = k + 1; p < motifs.count(); ++p)
        if (distances.phi(k, p) < 2.0 * threshold.value) all_apart = false;
    CHECK((motif::hard_violation(motifs, threshold) == 0.0) == all_apart);
  }
}
