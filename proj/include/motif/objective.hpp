#pragma once

#include <cstdint>
#include <vector>

#include "motif/matrix.hpp"
#include "motif/segmentation.hpp"

namespace motif {

// K candidate motifs of length L.
struct MotifSet {
  Matrix data;

  std::size_t count() const { return data.rows; }
  std::size_t length() const { return data.cols; }
};

// Smooth match scores exp(-(alpha/T) * dist2(M_k, S_j)), all in (0, 1].
struct MatchProfile {
  Matrix per_pair;           // K x J
  double total_smooth = 0.0; // mean over all K*J entries
};

// Nontrivial match counts per motif, plus the counted segment indices.
struct HardFrequencyReport {
  std::vector<std::int64_t> per_motif;
  std::int64_t total = 0;
  std::vector<std::vector<std::size_t>> matches;
};

// Symmetric squared distances between motif pairs, zero diagonal.
struct PairDistances {
  Matrix phi; // K x K
};

// Scans segments in index order per motif. A segment matches when its squared
// distance is strictly below T; a match is counted only when it is more than
// one index past the previous match (counted or not), which drops runs of
// adjacent windows that all hit the same motif.
HardFrequencyReport hard_frequency(const MotifSet& motifs, const SegmentMatrix& segments,
                                   const Threshold& threshold);

MatchProfile smooth_frequency(const MotifSet& motifs, const SegmentMatrix& segments,
                              const Threshold& threshold, double alpha);

PairDistances pairwise_motif_distances(const MotifSet& motifs);

// Mean linear penalty over motif pairs closer than 2T; 0 for a single motif.
double hard_violation(const MotifSet& motifs, const Threshold& threshold);

// Same structure with each pair term squared (differentiable at the 2T edge).
double smooth_violation(const MotifSet& motifs, const Threshold& threshold);
double smooth_violation_from(const PairDistances& distances, const Threshold& threshold);

// smooth frequency minus smooth violation, in (-1, 1].
double objective(const MotifSet& motifs, const SegmentMatrix& segments,
                 const Threshold& threshold, double alpha);

// Analytic gradients of the smooth terms with respect to every motif value.
Matrix grad_frequency(const MotifSet& motifs, const SegmentMatrix& segments,
                      const Threshold& threshold, double alpha);
Matrix grad_frequency_from(const MotifSet& motifs, const SegmentMatrix& segments,
                           const Threshold& threshold, double alpha,
                           const MatchProfile& profile);
Matrix grad_violation(const MotifSet& motifs, const Threshold& threshold);
Matrix grad_violation_from(const MotifSet& motifs, const Threshold& threshold,
                           const PairDistances& distances);
Matrix grad_objective(const MotifSet& motifs, const SegmentMatrix& segments,
                      const Threshold& threshold, double alpha);

}  // namespace motif
