#include "chshkit/analysis.hpp"

#include <cmath>

namespace chsh {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Local:
      return "local";
    case Classification::HilbertNonlocal:
      return "hilbert_nonlocal";
    case Classification::SupraQuantum:
      return "supra_quantum";
  }
  return "unknown";
}

AnalysisReport analyze_block(const CorrelationBlock& block, Mode mode, double tol) {
  AnalysisReport r{block,
                   chsh_report(block),
                   decide_hilbert_model(block, Mode::Real, tol),
                   std::nullopt,
                   r_certificate(block),
                   Classification::Local};
  if (mode == Mode::Hermitian) {
    r.completion_hermitian = decide_hilbert_model(block, Mode::Hermitian, tol);
  }
  if (!r.completion.feasible()) {
    r.classification = Classification::SupraQuantum;
  } else if (r.chsh.is_local) {
    r.classification = Classification::Local;
  } else {
    r.classification = Classification::HilbertNonlocal;
  }
  return r;
}

std::vector<ScanRow> scan_prbox_mix(int steps, double tol) {
  if (steps < 2) throw InvariantError("scan needs at least 2 steps");
  std::vector<ScanRow> rows(steps);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
    const double e = t;  // entries of t * sqrt(2) * H are (t, t, t, -t)
    const CorrelationBlock block(e, e, e, -e);
    const CompletionResult res = decide_hilbert_model(block, Mode::Real, tol);
    rows[i] = ScanRow{t, std::abs(chsh_value(block)), res.feasible(), res.lambda_star};
  }
  return rows;
}

}  // namespace chsh
