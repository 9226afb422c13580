#pragma once

#include <cstdint>
#include <string>

namespace motif {

struct GradCheckOptions {
  std::size_t instances = 100;
  std::uint64_t seed = 20240611;
  double step = 1e-5;
  double rel_tol = 1e-4;
  double abs_tol = 1e-8;   // applies where |analytic| < abs_switch
  double abs_switch = 1e-6;
};

struct GradCheckReport {
  std::size_t instances = 0;
  double max_rel_frequency = 0.0;
  double max_rel_violation = 0.0;
  double max_rel_objective = 0.0;
  std::size_t failures = 0;
  bool pass = false;
  std::string summary() const;
};

// Central finite differences of the smooth terms against the analytic
// gradients on seeded random instances (K in 1..4, J in 1..8, L in 1..16,
// T in [0.1,10], alpha in {1,2,3}).
GradCheckReport run_gradient_check(const GradCheckOptions& options = {});

}  // namespace motif
