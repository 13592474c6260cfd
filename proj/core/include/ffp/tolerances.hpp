#pragma once

namespace ffp {

// One knob set for the whole library.
//   structural  — type invariants: orthonormality, hermiticity, PSD checks
//   convergence — stopping thresholds of iterative solvers
//   reporting   — verdict thresholds surfaced to users (tightness etc.)
struct ToleranceConfig {
  double structural = 1e-10;
  double convergence = 1e-9;
  double reporting = 1e-6;
};

inline constexpr ToleranceConfig kDefaultTolerances{};

}  // namespace ffp
