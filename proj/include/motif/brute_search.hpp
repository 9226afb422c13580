#pragma once

#include <cstdint>
#include <vector>

#include "motif/objective.hpp"
#include "motif/segmentation.hpp"

namespace motif {

// Nontrivial match count of every segment treated as a candidate motif.
struct SegmentFrequencies {
  std::vector<std::int64_t> counts;
};

// O(J^2 L) scan; the inner loop includes the segment itself (self-distance 0).
// `skip_trivial=false` is a test hook that counts every match.
SegmentFrequencies segment_frequencies(const SegmentMatrix& segments,
                                       const Threshold& threshold,
                                       bool skip_trivial = true);

struct BruteResult {
  MotifSet motifs;
  HardFrequencyReport hard;
  std::vector<std::size_t> selected;  // source segment index of each motif
  bool short_selection = false;       // fewer than K diverse segments existed
};

// Greedy top-K: each step takes the highest-frequency segment whose squared
// distance to every already-selected motif exceeds 2T (ties: lowest index).
// Runs out of eligible segments -> partial result with short_selection set.
BruteResult brute_force_search(const SegmentMatrix& segments, const Threshold& threshold,
                               std::size_t motif_count);

}  // namespace motif
