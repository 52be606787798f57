#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "chshkit/corrmodel.hpp"
#include "chshkit/generators.hpp"

namespace chsh {

// Exact infeasibility witness from the R trace pairing: when |S| > 2 sqrt(2),
// one of Tr(C R+-) = 4 -+ sqrt(2)|S| is negative for every completion.
struct AnalyticCertificate {
  char which;    // '+' or '-': the R matrix whose pairing is negative
  double value;  // 4 - sqrt(2) * |S|, always negative when present
};

enum class CompletionStatus { Feasible, Infeasible };

struct CompletionResult {
  CompletionStatus status;
  Mode mode;
  std::complex<double> x_star;  // imaginary parts zero in real mode
  std::complex<double> y_star;
  double lambda_star;  // max over the search box of the minimum eigenvalue
  std::optional<std::vector<std::vector<double>>> gram_vectors;  // real + feasible
  std::optional<AnalyticCertificate> analytic_certificate;       // iff |S| > 2 sqrt(2)

  bool feasible() const { return status == CompletionStatus::Feasible; }
};

struct SearchOptimum {
  std::complex<double> x;
  std::complex<double> y;
  double lambda;
};

// Minimum eigenvalue of the assembled full matrix at one parameter point.
double lambda_min_at(const CorrelationBlock& block, double x, double y);
double lambda_min_at(const CorrelationBlock& block, std::complex<double> x,
                     std::complex<double> y);

// Maximizes lambda_min(full(block, x, y)) over the box |x|,|y| <= 1 (two real
// parameters in real mode, four in hermitian mode). lambda_min of an affine
// matrix family is concave, so the search is a global one: golden-section
// ascent over coordinate and diagonal directions, restarted from (0,0) and
// five random points seeded from the block's bytes.
SearchOptimum max_min_eigenvalue(const CorrelationBlock& block, Mode mode = Mode::Real);

CompletionResult decide_hilbert_model(const CorrelationBlock& block, Mode mode = Mode::Real,
                                      double tol = kDefaultPsdTol);

// Unit vectors (u1, u2, v1, v2) whose pairwise inner products reproduce the
// full matrix; real mode only. Throws NotPsdError below -tol.
std::vector<std::vector<double>> realize_gram(const FullCorrelationMatrix& full,
                                              double tol = kDefaultPsdTol);

// Exhaustive (x, y) grid scan of lambda_min over [-1,1]^2; the independent
// oracle for decide_hilbert_model. Runs the grid in parallel when OpenMP is
// enabled; chsh::reference holds the serial loop it is tested against.
double grid_max_min_eigenvalue(const CorrelationBlock& block, double step);

// True iff some grid point is PSD within tol. Grid coarseness costs at most
// 4*step in eigenvalue (Lipschitz bound), so oracle comparisons against the
// solver must widen tolerances by that much.
bool feasibility_oracle_grid(const CorrelationBlock& block, double step,
                             double tol = kDefaultPsdTol);

struct ExerciseResult {
  CorrelationBlock block;      // best block found (real-feasible by construction)
  double b_value;              // its |S|
  std::uint64_t best_index;    // 0 = deterministic saturating construction
  std::uint64_t samples;
  std::uint64_t seed;
  CompletionResult completion; // real-mode decision on the best block
};

// Searches for real-feasible blocks with CHSH value above the classical
// bound 2 by scoring Gram blocks of random unit-vector 4-tuples (dimension
// cycling 2, 3, 4 by sample index). Candidate 0 is always the deterministic
// saturating construction, so the search returns a witness with |S| at the
// Tsirelson bound even at samples = 1. Candidates are scored independently
// per index and reduced by (value, lowest index), which keeps the parallel
// loop equal to the serial reference.
ExerciseResult exercise_search(std::uint64_t samples, std::uint64_t seed);

// The block scored for candidate `index` of a given seed.
CorrelationBlock exercise_candidate_block(std::uint64_t seed, std::uint64_t index);

}  // namespace chsh
