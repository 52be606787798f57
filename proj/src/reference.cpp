#include "chshkit/reference.hpp"

#include <algorithm>
#include <cmath>

namespace chsh::reference {

double grid_max_min_eigenvalue(const CorrelationBlock& block, double step) {
  if (!(step > 0.0 && step <= 0.1)) {
    throw InvariantError("grid step must be in (0, 0.1]");
  }
  const long long n = std::llround(2.0 / step);
  double best = -8.0;
  for (long long i = 0; i <= n; ++i) {
    const double x = std::min(1.0, -1.0 + static_cast<double>(i) * step);
    for (long long j = 0; j <= n; ++j) {
      const double y = std::min(1.0, -1.0 + static_cast<double>(j) * step);
      best = std::max(best, lambda_min_at(block, x, y));
    }
  }
  return best;
}

ExerciseResult exercise_search(std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw InvariantError("exercise search needs samples >= 1");
  double best_b = -1.0;
  std::uint64_t best_idx = 0;
  for (std::uint64_t k = 0; k <= samples; ++k) {
    const double b = std::abs(chsh_value(exercise_candidate_block(seed, k)));
    if (b > best_b) {
      best_b = b;
      best_idx = k;
    }
  }
  const CorrelationBlock block = exercise_candidate_block(seed, best_idx);
  return ExerciseResult{
      block,
      std::abs(chsh_value(block)),
      best_idx,
      samples,
      seed,
      decide_hilbert_model(block, Mode::Real),
  };
}

std::vector<ScanRow> scan_prbox_mix(int steps, double tol) {
  if (steps < 2) throw InvariantError("scan needs at least 2 steps");
  std::vector<ScanRow> rows(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
    const CorrelationBlock block(t, t, t, -t);
    const CompletionResult res = decide_hilbert_model(block, Mode::Real, tol);
    rows[i] = ScanRow{t, std::abs(chsh_value(block)), res.feasible(), res.lambda_star};
  }
  return rows;
}

}  // namespace chsh::reference
