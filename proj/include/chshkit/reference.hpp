#pragma once

#include <cstdint>
#include <vector>

#include "chshkit/analysis.hpp"
#include "chshkit/completion.hpp"

namespace chsh::reference {

// Single-threaded counterparts of the OpenMP kernels. Each shares the
// per-element computation with its parallel twin, so any difference in
// results pins the blame on the parallel reduction. Tests assert exact
// equality; the bench tool compares throughput.

double grid_max_min_eigenvalue(const CorrelationBlock& block, double step);

ExerciseResult exercise_search(std::uint64_t samples, std::uint64_t seed);

std::vector<ScanRow> scan_prbox_mix(int steps, double tol = kDefaultPsdTol);

}  // namespace chsh::reference
