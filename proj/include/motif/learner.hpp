#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "motif/objective.hpp"
#include "motif/segmentation.hpp"

namespace motif {

struct LearnConfig {
  Threshold threshold;
  std::size_t motif_count = 1;   // K
  std::size_t motif_length = 1;  // L, must equal the segment length
  double alpha = 2.0;
  double eta = 0.1;
  std::size_t iters = 1000;
  std::size_t restarts = 200;
  std::uint64_t seed = 0;
  bool trace = false;
  // Test hook: when false the update uses only the frequency gradient,
  // leaving diversity violations unpenalized.
  bool use_diversity_gradient = true;
};

struct LearnTraces {
  std::vector<double> objective;
  std::vector<double> smooth_frequency;
  std::vector<double> smooth_violation;
};

struct LearnResult {
  MotifSet motifs;
  HardFrequencyReport hard;        // trivial matches excluded
  double hard_violation_final = 0.0;
  std::optional<LearnTraces> traces;
  std::size_t restart_index = 0;
  std::vector<std::size_t> init_segment_indices;
};

// One gradient-ascent run: motifs start at K distinct segments drawn from the
// restart-seeded generator, then I iterations of per-coordinate updates with
// AdaGrad step sizes. Gradients within an iteration come from the
// iteration-start motifs (match scores and pair distances are precomputed).
LearnResult learn_motifs(const SegmentMatrix& segments, const LearnConfig& config,
                         std::uint64_t restart_seed);

struct RestartSelection {
  LearnResult result;
  // Set when no restart reached zero hard violation and the best result was
  // taken regardless.
  bool nonzero_violation = false;
};

// R independent runs seeded by stable_hash(config.seed, r). Selects the
// highest nontrivial hard frequency among zero-hard-violation restarts
// (falling back to the overall best, flagged); ties go to the lowest restart
// index. `threads` > 1 runs restarts concurrently with identical results.
RestartSelection learn_with_restarts(const SegmentMatrix& segments,
                                     const LearnConfig& config, unsigned threads = 1);

}  // namespace motif
