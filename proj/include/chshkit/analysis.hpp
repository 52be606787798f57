#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chshkit/completion.hpp"
#include "chshkit/corrmodel.hpp"

namespace chsh {

enum class Classification { Local, HilbertNonlocal, SupraQuantum };

std::string to_string(Classification c);

// Aggregated per-block verdict: CHSH quantities, the real-mode completion,
// the R trace pairings, and the three-way classification. The hermitian
// completion is attached on request; classification always follows the
// real-mode decision (for measured real blocks the two verdicts coincide).
struct AnalysisReport {
  CorrelationBlock block;
  ChshReport chsh;
  CompletionResult completion;  // real mode
  std::optional<CompletionResult> completion_hermitian;
  std::pair<double, double> r_cert;  // (Tr C R+, Tr C R-)
  Classification classification;
};

AnalysisReport analyze_block(const CorrelationBlock& block, Mode mode = Mode::Real,
                             double tol = kDefaultPsdTol);

struct ScanRow {
  double t;
  double b_value;
  bool feasible;
  double lambda_star;
};

// The prbox_mix family: block(t) = t * sqrt(2) * H for `steps` evenly spaced
// t in [0, 1]. Feasibility flips at t = 1/sqrt(2), where the CHSH value 4t
// meets the Tsirelson bound. Rows are independent; the loop is parallel
// under OpenMP with output order fixed by row index.
std::vector<ScanRow> scan_prbox_mix(int steps, double tol = kDefaultPsdTol);

}  // namespace chsh
