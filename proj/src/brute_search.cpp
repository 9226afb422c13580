#include "motif/brute_search.hpp"

#include <limits>

#include "motif/errors.hpp"

namespace motif {

SegmentFrequencies segment_frequencies(const SegmentMatrix& segments,
                                       const Threshold& threshold, bool skip_trivial) {
  const std::size_t j_count = segments.count();
  SegmentFrequencies freqs;
  freqs.counts.assign(j_count, 0);

  for (std::size_t j = 0; j < j_count; ++j) {
    const auto candidate = segments.data.row(j);
    std::int64_t last_match = std::numeric_limits<std::int64_t>::min() / 2;
    for (std::size_t r = 0; r < j_count; ++r) {
      const double dist = squared_distance(candidate, segments.data.row(r));
      if (dist < threshold.value) {
        if (!skip_trivial || static_cast<std::int64_t>(r) - last_match > 1) {
          ++freqs.counts[j];
        }
        last_match = static_cast<std::int64_t>(r);
      }
    }
  }
  return freqs;
}

BruteResult brute_force_search(const SegmentMatrix& segments, const Threshold& threshold,
                               std::size_t motif_count) {
  const std::size_t j_count = segments.count();
  const std::size_t l_count = segments.length();
  const SegmentFrequencies freqs = segment_frequencies(segments, threshold);
  const double two_t = 2.0 * threshold.value;

  BruteResult result;
  result.selected.reserve(motif_count);

  for (std::size_t k = 0; k < motif_count; ++k) {
    // Highest precomputed frequency among segments farther than 2T from every
    // already-selected motif; first eligible segment seeds the argmax.
    bool found = false;
    std::size_t best = 0;
    for (std::size_t j = 0; j < j_count; ++j) {
      bool diverse = true;
      for (const std::size_t picked : result.selected) {
        if (!(squared_distance(segments.data.row(j), segments.data.row(picked)) > two_t)) {
          diverse = false;
          break;
        }
      }
      if (!diverse) continue;
      if (!found || freqs.counts[j] > freqs.counts[best]) {
        best = j;
        found = true;
      }
    }
    if (!found) {
      result.short_selection = true;
      break;
    }
    result.selected.push_back(best);
  }

  result.motifs.data = Matrix(result.selected.size(), l_count);
  for (std::size_t k = 0; k < result.selected.size(); ++k) {
    const auto source = segments.data.row(result.selected[k]);
    std::copy(source.begin(), source.end(), result.motifs.data.row(k).begin());
  }
  result.hard = result.selected.empty()
                    ? HardFrequencyReport{}
                    : hard_frequency(result.motifs, segments, threshold);
  return result;
}

}  // namespace motif
