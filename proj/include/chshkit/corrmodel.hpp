#pragma once

#include <array>
#include <complex>
#include <utility>

#include "chshkit/matcore.hpp"

namespace chsh {

constexpr double kEntryTol = 1e-12;      // slack on the |entry| <= 1 bound
constexpr double kBoundaryTol = 1e-9;    // local / Tsirelson boundaries are closed
inline const double kTsirelson = 2.0 * std::sqrt(2.0);

// Measured 2x2 correlation block: c(i, j) = <A_{i+1} B_{j+1}>. The block is
// not required to be symmetric; only the entry bound |c| <= 1 is enforced.
class CorrelationBlock {
 public:
  CorrelationBlock(double c11, double c12, double c21, double c22);
  explicit CorrelationBlock(const std::array<std::array<double, 2>, 2>& c);

  double operator()(int i, int j) const { return c_[i][j]; }
  const std::array<std::array<double, 2>, 2>& entries() const { return c_; }

  bool operator==(const CorrelationBlock& o) const { return c_ == o.c_; }

 private:
  std::array<std::array<double, 2>, 2> c_;
};

enum class Mode { Real, Hermitian };

// The 4x4 full correlation matrix over (A1, A2, B1, B2): unit diagonal, the
// measured block in the off-diagonal corner, and the unmeasured same-side
// correlations x = <A1 A2>, y = <B1 B2> (complex only in hermitian mode).
struct FullCorrelationMatrix {
  CorrelationBlock block;
  std::complex<double> x;
  std::complex<double> y;
  Mode mode = Mode::Real;

  // Assembled matrix; real_matrix() requires mode == Real.
  SymMatrix real_matrix() const;
  HermMatrix herm_matrix() const;
};

FullCorrelationMatrix assemble_full(const CorrelationBlock& block, double x, double y);
FullCorrelationMatrix assemble_full_hermitian(const CorrelationBlock& block,
                                              std::complex<double> x,
                                              std::complex<double> y);

// Signed CHSH combination S = c11 + c12 + c21 - c22; the classic parameter
// is |S|.
double chsh_value(const CorrelationBlock& block);

// Same quantity through the trace identity sqrt(2)*|Tr(C H)| with the 2x2
// Hadamard matrix H; computed literally as a trace so it cross-checks
// chsh_value through an independent arithmetic route.
double chsh_via_hadamard(const CorrelationBlock& block);

struct ChshVariants {
  // All eight odd-minus sign placements of +-c11 +- c12 +- c21 +- c22, both
  // global signs included, ordered by minus position then sign.
  std::array<double, 8> values;
  double max;
};

ChshVariants chsh_all_variants(const CorrelationBlock& block);

struct ChshReport {
  double s_canonical;
  double b_canonical;  // |s_canonical|
  std::array<double, 8> variants;
  double b_max;
  bool is_local;
  bool within_tsirelson;
};

ChshReport chsh_report(const CorrelationBlock& block);

// The PSD certificate pair R+- = [[I, +-H], [+-H, I]]; both have spectrum
// {0, 0, 2, 2}.
std::pair<SymMatrix, SymMatrix> r_matrices();

// Trace pairings (Tr(C R+), Tr(C R-)) = 4 +- sqrt(2) S. They do not depend
// on x, y (those multiply zero entries of R+-), and a negative value rules
// out any PSD completion.
std::pair<double, double> r_certificate(const CorrelationBlock& block);

// Necessary condition for a Hilbert model: every CHSH variant <= 2 sqrt(2).
bool tsirelson_check(const CorrelationBlock& block);

// Classical (LHV) condition: every CHSH variant <= 2. Agrees with
// membership in the convex hull of the 16 deterministic strategies; the LP
// below is the independent oracle for that claim.
bool is_local(const CorrelationBlock& block);

struct LocalDecomposition {
  bool feasible;
  // Weight on strategy k, where bits (3,2,1,0) of k give the signs of
  // (a1, a2, b1, b2): bit set means +1.
  std::array<double, 16> weights;
};

// Linear feasibility over the 16 deterministic strategies (dense phase-1
// simplex, Bland's rule). Infeasible is a returned status, not an error.
LocalDecomposition local_decomposition(const CorrelationBlock& block);

// Strategy k's block entry <a_i b_j> under the bit convention above.
double strategy_correlation(int k, int i, int j);
double strategy_x(int k);  // a1 * a2
double strategy_y(int k);  // b1 * b2

}  // namespace chsh
