#include "motif/gradcheck.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "motif/objective.hpp"
#include "motif/rng.hpp"
#include "motif/segmentation.hpp"

namespace motif {

namespace {

struct Instance {
  MotifSet motifs;
  SegmentMatrix segments;
  Threshold threshold;
  double alpha = 1.0;
};

Instance random_instance(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> value(-2.0, 2.0);
  std::uniform_real_distribution<double> thresh(0.1, 10.0);

  Instance inst;
  const std::size_t k = 1 + rng() % 4;
  const std::size_t j = 1 + rng() % 8;
  const std::size_t l = 1 + rng() % 16;
  inst.motifs.data = Matrix(k, l);
  Matrix segment_rows(j, l);
  for (auto& v : inst.motifs.data.data) v = value(rng);
  for (auto& v : segment_rows.data) v = value(rng);
  inst.segments = SegmentMatrix::from_rows(std::move(segment_rows));
  inst.threshold = Threshold{thresh(rng), std::nullopt, 0};
  inst.alpha = static_cast<double>(1 + rng() % 3);
  return inst;
}

// max over entries of the relative (or tiny-value absolute) mismatch,
// expressed as a multiple of its tolerance so "< 1" means pass.
double worst_mismatch(const Matrix& analytic, const Matrix& numeric,
                      const GradCheckOptions& options) {
  double worst = 0.0;
  for (std::size_t i = 0; i < analytic.data.size(); ++i) {
    const double a = analytic.data[i];
    const double n = numeric.data[i];
    const double diff = std::abs(a - n);
    const double ratio = std::abs(a) < options.abs_switch
                             ? diff / options.abs_tol
                             : diff / std::abs(a) / options.rel_tol;
    worst = std::max(worst, ratio);
  }
  return worst;
}

template <typename Fn>
Matrix central_difference(MotifSet& motifs, double step, Fn&& evaluate) {
  Matrix numeric(motifs.data.rows, motifs.data.cols);
  for (std::size_t i = 0; i < motifs.data.data.size(); ++i) {
    const double saved = motifs.data.data[i];
    motifs.data.data[i] = saved + step;
    const double plus = evaluate();
    motifs.data.data[i] = saved - step;
    const double minus = evaluate();
    motifs.data.data[i] = saved;
    numeric.data[i] = (plus - minus) / (2.0 * step);
  }
  return numeric;
}

}  // namespace

std::string GradCheckReport::summary() const {
  std::ostringstream out;
  out << (pass ? "PASS" : "FAIL") << ": " << instances << " instances, "
      << failures << " failing entries; worst error/tolerance ratios: frequency="
      << max_rel_frequency << " violation=" << max_rel_violation
      << " objective=" << max_rel_objective;
  return out.str();
}

GradCheckReport run_gradient_check(const GradCheckOptions& options) {
  std::mt19937_64 rng(options.seed);
  GradCheckReport report;
  report.instances = options.instances;

  for (std::size_t i = 0; i < options.instances; ++i) {
    Instance inst = random_instance(rng);

    const Matrix freq_grad =
        grad_frequency(inst.motifs, inst.segments, inst.threshold, inst.alpha);
    const Matrix freq_numeric = central_difference(inst.motifs, options.step, [&] {
      return smooth_frequency(inst.motifs, inst.segments, inst.threshold, inst.alpha)
          .total_smooth;
    });
    const double freq_ratio = worst_mismatch(freq_grad, freq_numeric, options);

    const Matrix viol_grad = grad_violation(inst.motifs, inst.threshold);
    const Matrix viol_numeric = central_difference(inst.motifs, options.step, [&] {
      return smooth_violation(inst.motifs, inst.threshold);
    });
    const double viol_ratio = worst_mismatch(viol_grad, viol_numeric, options);

    const Matrix obj_grad =
        grad_objective(inst.motifs, inst.segments, inst.threshold, inst.alpha);
    const Matrix obj_numeric = central_difference(inst.motifs, options.step, [&] {
      return objective(inst.motifs, inst.segments, inst.threshold, inst.alpha);
    });
    const double obj_ratio = worst_mismatch(obj_grad, obj_numeric, options);

    report.max_rel_frequency = std::max(report.max_rel_frequency, freq_ratio);
    report.max_rel_violation = std::max(report.max_rel_violation, viol_ratio);
    report.max_rel_objective = std::max(report.max_rel_objective, obj_ratio);
    if (freq_ratio >= 1.0 || viol_ratio >= 1.0 || obj_ratio >= 1.0) ++report.failures;
  }

  report.pass = report.failures == 0;
  return report;
}

}  // namespace motif
