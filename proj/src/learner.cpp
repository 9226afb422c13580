#include "motif/learner.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include "motif/errors.hpp"
#include "motif/rng.hpp"

namespace motif {

namespace {

void validate(const SegmentMatrix& segments, const LearnConfig& config) {
  if (!(config.threshold.value > 0.0)) {
    throw Error(ErrorCode::InvalidThreshold, "learner requires a positive threshold");
  }
  if (!(config.alpha > 0.0) || !(config.eta > 0.0)) {
    throw Error(ErrorCode::ConfigError, "alpha and eta must be positive");
  }
  if (config.iters == 0 || config.restarts == 0 || config.motif_count == 0) {
    throw Error(ErrorCode::ConfigError, "iters, restarts and motif count must be >= 1");
  }
  if (config.motif_length != segments.length()) {
    throw Error(ErrorCode::DimensionMismatch,
                "configured motif length " + std::to_string(config.motif_length) +
                    " != segment length " + std::to_string(segments.length()));
  }
  if (segments.count() < config.motif_count) {
    throw Error(ErrorCode::TooFewSegments,
                "need at least K=" + std::to_string(config.motif_count) +
                    " segments to initialize distinct motifs, have " +
                    std::to_string(segments.count()));
  }
}

}  // namespace

LearnResult learn_motifs(const SegmentMatrix& segments, const LearnConfig& config,
                         std::uint64_t restart_seed) {
  validate(segments, config);
  const std::size_t k_count = config.motif_count;
  const std::size_t j_count = segments.count();
  const std::size_t l_count = segments.length();

  LearnResult result;
  std::mt19937_64 rng(restart_seed);
  result.init_segment_indices = sample_distinct(rng, j_count, k_count);

  result.motifs.data = Matrix(k_count, l_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    const auto source = segments.data.row(result.init_segment_indices[k]);
    std::copy(source.begin(), source.end(), result.motifs.data.row(k).begin());
  }

  if (config.trace) {
    result.traces.emplace();
    result.traces->objective.reserve(config.iters);
    result.traces->smooth_frequency.reserve(config.iters);
    result.traces->smooth_violation.reserve(config.iters);
  }

  Matrix accumulator(k_count, l_count);  // running sums of squared gradients
  MotifSet& motifs = result.motifs;

  for (std::size_t iter = 0; iter < config.iters; ++iter) {
    // Match scores and pair distances are fixed at iteration start; every
    // coordinate update in this iteration uses them.
    const MatchProfile profile =
        smooth_frequency(motifs, segments, config.threshold, config.alpha);
    const PairDistances distances = pairwise_motif_distances(motifs);

    if (result.traces) {
      const double viol = smooth_violation_from(distances, config.threshold);
      result.traces->smooth_frequency.push_back(profile.total_smooth);
      result.traces->smooth_violation.push_back(viol);
      result.traces->objective.push_back(profile.total_smooth - viol);
    }

    const Matrix freq_grad =
        grad_frequency_from(motifs, segments, config.threshold, config.alpha, profile);
    Matrix grad = freq_grad;
    if (config.use_diversity_gradient) {
      const Matrix viol_grad =
          grad_violation_from(motifs, config.threshold, distances);
      for (std::size_t i = 0; i < grad.data.size(); ++i) {
        grad.data[i] -= viol_grad.data[i];
      }
    }

    for (std::size_t i = 0; i < grad.data.size(); ++i) {
      const double g = grad.data[i];
      if (!std::isfinite(g)) {
        throw Error(ErrorCode::NonFiniteValue,
                    "gradient became non-finite at iteration " + std::to_string(iter));
      }
      accumulator.data[i] += g * g;
      if (accumulator.data[i] > 0.0) {
        // Zero accumulator means every gradient so far (this one included)
        // was zero, so the true step is zero: skip instead of dividing.
        motifs.data.data[i] += config.eta / std::sqrt(accumulator.data[i]) * g;
      }
    }

    for (const double v : motifs.data.data) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::NonFiniteValue,
                    "motif value became non-finite at iteration " +
                        std::to_string(iter) + " (eta too large?)");
      }
    }
  }

  result.hard = hard_frequency(motifs, segments, config.threshold);
  result.hard_violation_final = hard_violation(motifs, config.threshold);
  return result;
}

RestartSelection learn_with_restarts(const SegmentMatrix& segments,
                                     const LearnConfig& config, unsigned threads) {
  validate(segments, config);
  const std::size_t restarts = config.restarts;
  std::vector<LearnResult> results(restarts);

  auto run_range = [&](std::size_t worker, std::size_t step) {
    for (std::size_t r = worker; r < restarts; r += step) {
      results[r] = learn_motifs(segments, config, stable_hash(config.seed, r));
      results[r].restart_index = r;
    }
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(restarts)));
  if (workers == 1) {
    run_range(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          run_range(w, workers);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Hard (nontrivial) frequency decides; restarts that end with diversity
  // violations only win if nothing violation-free exists.
  auto select = [&](bool require_zero_violation) -> int {
    int best = -1;
    for (std::size_t r = 0; r < restarts; ++r) {
      if (require_zero_violation && results[r].hard_violation_final != 0.0) continue;
      if (best < 0 || results[r].hard.total > results[static_cast<std::size_t>(best)].hard.total) {
        best = static_cast<int>(r);
      }
    }
    return best;
  };

  RestartSelection selection;
  int best = select(true);
  if (best < 0) {
    best = select(false);
    selection.nonzero_violation = true;
  }
  selection.result = std::move(results[static_cast<std::size_t>(best)]);
  return selection;
}

}  // namespace motif
