#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "chshkit/corrmodel.hpp"
#include "chshkit/rng.hpp"

namespace chsh {

// One deterministic assignment of the four +-1 outcomes.
struct DeterministicStrategy {
  int a1, a2, b1, b2;

  DeterministicStrategy(int a1_, int a2_, int b1_, int b2_);
  // Strategy for index k under the bit convention of local_decomposition.
  static DeterministicStrategy from_index(int k);
};

// Probability mixture over the 16 deterministic strategies.
struct LhvModel {
  std::array<double, 16> weights;

  explicit LhvModel(const std::array<double, 16>& w);
};

// Two-qubit pure state with one Bloch measurement direction per setting.
// Observables are (aDir . sigma) x 1 and 1 x (bDir . sigma).
struct QubitModel {
  std::array<std::complex<double>, 4> amplitudes;  // basis order |00>,|01>,|10>,|11>
  std::array<std::array<double, 3>, 2> a_dirs;
  std::array<std::array<double, 3>, 2> b_dirs;

  QubitModel(const std::array<std::complex<double>, 4>& amps,
             const std::array<std::array<double, 3>, 2>& a,
             const std::array<std::array<double, 3>, 2>& b);
};

// Four real unit vectors; their Gram matrix is a full correlation matrix
// that is PSD by construction.
struct VectorModel {
  std::vector<double> u1, u2, v1, v2;  // common dimension <= 4

  VectorModel(std::vector<double> u1_, std::vector<double> u2_, std::vector<double> v1_,
              std::vector<double> v2_);

  // u1, u2 orthonormal; v1,2 = (u1 +- u2)/sqrt(2). Saturates the Tsirelson
  // bound with a plain real Gram construction.
  static VectorModel tsirelson_saturating();
};

struct GeneratedCorrelations {
  CorrelationBlock block;
  FullCorrelationMatrix full;
};

GeneratedCorrelations correlations_from_lhv(const LhvModel& m);
GeneratedCorrelations correlations_from_qubit(const QubitModel& m);  // hermitian full
GeneratedCorrelations correlations_from_vectors(const VectorModel& m);

// The extremal nonsignaling block sign * sqrt(2) * H, i.e. entries
// sign * (1, 1, 1, -1); its CHSH value is 4.
CorrelationBlock pr_box(int sign);

enum class BlockSampling { Cube, Feasible, Lhv };

CorrelationBlock random_block(std::uint64_t seed, BlockSampling mode);

// Samplers used by tests and the exercise search; all consume an explicit
// seed and are reproducible.
LhvModel random_lhv_model(std::uint64_t seed);
QubitModel random_qubit_model(std::uint64_t seed);
VectorModel random_vector_model(std::uint64_t seed, int dim);

std::vector<double> random_unit_vector(SplitMix64& rng, int dim);

}  // namespace chsh
