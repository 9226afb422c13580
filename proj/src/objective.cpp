#include "motif/objective.hpp"

#include <cmath>
#include <limits>

#include "motif/errors.hpp"

namespace motif {

namespace {

void require_same_length(const MotifSet& motifs, const SegmentMatrix& segments) {
  if (motifs.length() != segments.length()) {
    throw Error(ErrorCode::DimensionMismatch,
                "motif length " + std::to_string(motifs.length()) +
                    " != segment length " + std::to_string(segments.length()));
  }
}

void require_positive(const Threshold& threshold) {
  if (!(threshold.value > 0.0)) {
    throw Error(ErrorCode::InvalidThreshold, "threshold must be positive");
  }
}

}  // namespace

HardFrequencyReport hard_frequency(const MotifSet& motifs, const SegmentMatrix& segments,
                                   const Threshold& threshold) {
  require_same_length(motifs, segments);
  const std::size_t k_count = motifs.count();
  const std::size_t j_count = segments.count();

  HardFrequencyReport report;
  report.per_motif.assign(k_count, 0);
  report.matches.assign(k_count, {});

  for (std::size_t k = 0; k < k_count; ++k) {
    std::int64_t last_match = std::numeric_limits<std::int64_t>::min() / 2;
    for (std::size_t j = 0; j < j_count; ++j) {
      const double dist = squared_distance(motifs.data.row(k), segments.data.row(j));
      if (dist < threshold.value) {
        // A match one index past the previous match is trivial; the previous
        // match moves the fence whether or not it was itself counted.
        if (static_cast<std::int64_t>(j) - last_match > 1) {
          ++report.per_motif[k];
          report.matches[k].push_back(j);
        }
        last_match = static_cast<std::int64_t>(j);
      }
    }
    report.total += report.per_motif[k];
  }
  return report;
}

MatchProfile smooth_frequency(const MotifSet& motifs, const SegmentMatrix& segments,
                              const Threshold& threshold, double alpha) {
  require_same_length(motifs, segments);
  require_positive(threshold);
  if (!(alpha > 0.0)) {
    throw Error(ErrorCode::ConfigError, "alpha must be positive");
  }

  const std::size_t k_count = motifs.count();
  const std::size_t j_count = segments.count();
  const double scale = alpha / threshold.value;

  MatchProfile profile;
  profile.per_pair = Matrix(k_count, j_count);
  double sum = 0.0;
  for (std::size_t k = 0; k < k_count; ++k) {
    for (std::size_t j = 0; j < j_count; ++j) {
      const double dist = squared_distance(motifs.data.row(k), segments.data.row(j));
      const double score = std::exp(-scale * dist);
      profile.per_pair(k, j) = score;
      sum += score;
    }
  }
  profile.total_smooth = sum / static_cast<double>(k_count * j_count);
  return profile;
}

PairDistances pairwise_motif_distances(const MotifSet& motifs) {
  const std::size_t k_count = motifs.count();
  PairDistances distances;
  distances.phi = Matrix(k_count, k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    for (std::size_t p = k + 1; p < k_count; ++p) {
      const double dist = squared_distance(motifs.data.row(k), motifs.data.row(p));
      distances.phi(k, p) = dist;
      distances.phi(p, k) = dist;
    }
  }
  return distances;
}

double hard_violation(const MotifSet& motifs, const Threshold& threshold) {
  const std::size_t k_count = motifs.count();
  if (k_count < 2) return 0.0;  // no pairs
  require_positive(threshold);

  const double two_t = 2.0 * threshold.value;
  double sum = 0.0;
  for (std::size_t k = 0; k < k_count; ++k) {
    for (std::size_t p = k + 1; p < k_count; ++p) {
      const double phi = squared_distance(motifs.data.row(k), motifs.data.row(p));
      if (phi < two_t) sum += 1.0 - phi / two_t;
    }
  }
  return 2.0 * sum / (static_cast<double>(k_count) * static_cast<double>(k_count - 1));
}

double smooth_violation_from(const PairDistances& distances, const Threshold& threshold) {
  const std::size_t k_count = distances.phi.rows;
  if (k_count < 2) return 0.0;
  require_positive(threshold);

  const double two_t = 2.0 * threshold.value;
  double sum = 0.0;
  for (std::size_t k = 0; k < k_count; ++k) {
    for (std::size_t p = k + 1; p < k_count; ++p) {
      const double phi = distances.phi(k, p);
      if (phi < two_t) {
        const double v = 1.0 - phi / two_t;
        sum += v * v;
      }
    }
  }
  return 2.0 * sum / (static_cast<double>(k_count) * static_cast<double>(k_count - 1));
}

double smooth_violation(const MotifSet& motifs, const Threshold& threshold) {
  if (motifs.count() < 2) return 0.0;
  return smooth_violation_from(pairwise_motif_distances(motifs), threshold);
}

double objective(const MotifSet& motifs, const SegmentMatrix& segments,
                 const Threshold& threshold, double alpha) {
  return smooth_frequency(motifs, segments, threshold, alpha).total_smooth -
         smooth_violation(motifs, threshold);
}

Matrix grad_frequency_from(const MotifSet& motifs, const SegmentMatrix& segments,
                           const Threshold& threshold, double alpha,
                           const MatchProfile& profile) {
  const std::size_t k_count = motifs.count();
  const std::size_t j_count = segments.count();
  const std::size_t l_count = motifs.length();
  const double coeff = -2.0 * alpha /
                       (static_cast<double>(k_count) * static_cast<double>(j_count) *
                        threshold.value);

  Matrix grad(k_count, l_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    const auto motif_row = motifs.data.row(k);
    const auto grad_row = grad.row(k);
    for (std::size_t j = 0; j < j_count; ++j) {
      const double score = profile.per_pair(k, j);
      const auto segment_row = segments.data.row(j);
      for (std::size_t l = 0; l < l_count; ++l) {
        grad_row[l] += (motif_row[l] - segment_row[l]) * score;
      }
    }
    for (std::size_t l = 0; l < l_count; ++l) grad_row[l] *= coeff;
  }
  return grad;
}

Matrix grad_frequency(const MotifSet& motifs, const SegmentMatrix& segments,
                      const Threshold& threshold, double alpha) {
  return grad_frequency_from(motifs, segments, threshold, alpha,
                             smooth_frequency(motifs, segments, threshold, alpha));
}

Matrix grad_violation_from(const MotifSet& motifs, const Threshold& threshold,
                           const PairDistances& distances) {
  const std::size_t k_count = motifs.count();
  const std::size_t l_count = motifs.length();
  Matrix grad(k_count, l_count);
  if (k_count < 2) return grad;
  require_positive(threshold);

  const double two_t = 2.0 * threshold.value;
  const double coeff = 2.0 / (static_cast<double>(k_count) *
                              static_cast<double>(k_count - 1) * threshold.value *
                              threshold.value);
  for (std::size_t k = 0; k < k_count; ++k) {
    const auto motif_row = motifs.data.row(k);
    const auto grad_row = grad.row(k);
    for (std::size_t q = 0; q < k_count; ++q) {
      if (q == k) continue;
      const double phi = distances.phi(k, q);
      if (phi >= two_t) continue;
      const double factor = phi - two_t;
      const auto other_row = motifs.data.row(q);
      for (std::size_t l = 0; l < l_count; ++l) {
        grad_row[l] += factor * (motif_row[l] - other_row[l]);
      }
    }
    for (std::size_t l = 0; l < l_count; ++l) grad_row[l] *= coeff;
  }
  return grad;
}

Matrix grad_violation(const MotifSet& motifs, const Threshold& threshold) {
  return grad_violation_from(motifs, threshold, pairwise_motif_distances(motifs));
}

Matrix grad_objective(const MotifSet& motifs, const SegmentMatrix& segments,
                      const Threshold& threshold, double alpha) {
  Matrix grad = grad_frequency(motifs, segments, threshold, alpha);
  const Matrix viol = grad_violation(motifs, threshold);
  for (std::size_t i = 0; i < grad.data.size(); ++i) grad.data[i] -= viol.data[i];
  return grad;
}

}  // namespace motif
