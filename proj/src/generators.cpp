#include "chshkit/generators.hpp"

#include <cmath>
#include <string>

namespace chsh {

namespace {

void check_pm1(int v, const char* what) {
  if (v != 1 && v != -1) throw InvariantError(std::string(what) + " must be +1 or -1");
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_unit(const std::vector<double>& v, const char* what) {
  if (v.empty() || v.size() > 4) {
    throw InvariantError(std::string(what) + ": dimension must be in [1, 4]");
  }
  if (std::abs(std::sqrt(dot(v, v)) - 1.0) > 1e-12) {
    throw InvariantError(std::string(what) + ": vector is not unit norm");
  }
}

using C2 = std::array<std::complex<double>, 4>;   // row-major 2x2
using C4 = std::array<std::complex<double>, 16>;  // row-major 4x4
using State = std::array<std::complex<double>, 4>;

C2 bloch_operator(const std::array<double, 3>& n) {
  // n . sigma = [[nz, nx - i ny], [nx + i ny, -nz]]
  return {std::complex<double>(n[2], 0.0), std::complex<double>(n[0], -n[1]),
          std::complex<double>(n[0], n[1]), std::complex<double>(-n[2], 0.0)};
}

C4 kron(const C2& a, const C2& b) {
  C4 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          out[(2 * i + k) * 4 + (2 * j + l)] = a[i * 2 + j] * b[k * 2 + l];
        }
      }
    }
  }
  return out;
}

C2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }

State apply(const C4& m, const State& psi) {
  State out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i] += m[i * 4 + j] * psi[j];
  }
  return out;
}

std::complex<double> inner(const State& a, const State& b) {
  std::complex<double> s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace

DeterministicStrategy::DeterministicStrategy(int a1_, int a2_, int b1_, int b2_)
    : a1(a1_), a2(a2_), b1(b1_), b2(b2_) {
  check_pm1(a1, "a1");
  check_pm1(a2, "a2");
  check_pm1(b1, "b1");
  check_pm1(b2, "b2");
}

DeterministicStrategy DeterministicStrategy::from_index(int k) {
  auto bit = [k](int b) { return (k >> b) & 1 ? 1 : -1; };
  return DeterministicStrategy(bit(3), bit(2), bit(1), bit(0));
}

LhvModel::LhvModel(const std::array<double, 16>& w) : weights(w) {
  double sum = 0.0;
  for (double v : w) {
    if (v < 0.0) throw InvariantError("LHV weights must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw InvariantError("LHV weights must sum to 1");
}

QubitModel::QubitModel(const std::array<std::complex<double>, 4>& amps,
                       const std::array<std::array<double, 3>, 2>& a,
                       const std::array<std::array<double, 3>, 2>& b)
    : amplitudes(amps), a_dirs(a), b_dirs(b) {
  double norm2 = 0.0;
  for (const auto& z : amps) norm2 += std::norm(z);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
    throw InvariantError("qubit state is not normalized");
  }
  for (const auto& d : {a[0], a[1], b[0], b[1]}) {
    const double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    if (std::abs(n - 1.0) > 1e-12) throw InvariantError("Bloch direction is not unit norm");
  }
}

VectorModel::VectorModel(std::vector<double> u1_, std::vector<double> u2_,
                         std::vector<double> v1_, std::vector<double> v2_)
    : u1(std::move(u1_)), u2(std::move(u2_)), v1(std::move(v1_)), v2(std::move(v2_)) {
  check_unit(u1, "u1");
  check_unit(u2, "u2");
  check_unit(v1, "v1");
  check_unit(v2, "v2");
  if (u1.size() != u2.size() || u1.size() != v1.size() || u1.size() != v2.size()) {
    throw InvariantError("vector model components must share one dimension");
  }
}

VectorModel VectorModel::tsirelson_saturating() {
  const double s = 1.0 / std::sqrt(2.0);
  return VectorModel({1.0, 0.0}, {0.0, 1.0}, {s, s}, {s, -s});
}

GeneratedCorrelations correlations_from_lhv(const LhvModel& m) {
  double c[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  double x = 0.0;
  double y = 0.0;
  for (int k = 0; k < 16; ++k) {
    const double w = m.weights[k];
    if (w == 0.0) continue;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) c[i][j] += w * strategy_correlation(k, i, j);
    }
    x += w * strategy_x(k);
    y += w * strategy_y(k);
  }
  const CorrelationBlock block(c[0][0], c[0][1], c[1][0], c[1][1]);
  return {block, assemble_full(block, x, y)};
}

GeneratedCorrelations correlations_from_qubit(const QubitModel& m) {
  // F = (A1, A2, B1, B2) as explicit 4x4 operators; the full matrix entry is
  // <psi| F_alpha F_beta |psi>, a hermitian Gram matrix of the F|psi>.
  const std::array<C4, 4> f = {
      kron(bloch_operator(m.a_dirs[0]), identity2()),
      kron(bloch_operator(m.a_dirs[1]), identity2()),
      kron(identity2(), bloch_operator(m.b_dirs[0])),
      kron(identity2(), bloch_operator(m.b_dirs[1])),
  };
  std::array<State, 4> fpsi;
  for (int k = 0; k < 4; ++k) fpsi[k] = apply(f[k], m.amplitudes);

  const double c11 = inner(fpsi[0], fpsi[2]).real();
  const double c12 = inner(fpsi[0], fpsi[3]).real();
  const double c21 = inner(fpsi[1], fpsi[2]).real();
  const double c22 = inner(fpsi[1], fpsi[3]).real();
  const std::complex<double> x = inner(fpsi[0], fpsi[1]);
  const std::complex<double> y = inner(fpsi[2], fpsi[3]);

  const CorrelationBlock block(c11, c12, c21, c22);
  return {block, assemble_full_hermitian(block, x, y)};
}

GeneratedCorrelations correlations_from_vectors(const VectorModel& m) {
  const CorrelationBlock block(dot(m.u1, m.v1), dot(m.u1, m.v2), dot(m.u2, m.v1),
                               dot(m.u2, m.v2));
  return {block, assemble_full(block, dot(m.u1, m.u2), dot(m.v1, m.v2))};
}

CorrelationBlock pr_box(int sign) {
  check_pm1(sign, "sign");
  const double s = static_cast<double>(sign);
  return CorrelationBlock(s, s, s, -s);
}

LhvModel random_lhv_model(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::array<double, 16> w{};
  double sum = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - rng.next_double());  // Exp(1) -> Dirichlet(1) after normalizing
    sum += v;
  }
  for (double& v : w) v /= sum;
  return LhvModel(w);
}

QubitModel random_qubit_model(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::array<std::complex<double>, 4> amps;
  double norm2 = 0.0;
  for (auto& z : amps) {
    z = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
    norm2 += std::norm(z);
  }
  for (auto& z : amps) z /= std::sqrt(norm2);

  auto dir = [&rng]() {
    const std::vector<double> v = random_unit_vector(rng, 3);
    return std::array<double, 3>{v[0], v[1], v[2]};
  };
  return QubitModel(amps, {dir(), dir()}, {dir(), dir()});
}

VectorModel random_vector_model(std::uint64_t seed, int dim) {
  if (dim < 1 || dim > 4) throw InvariantError("vector model dimension must be in [1, 4]");
  SplitMix64 rng(seed);
  auto vec = [&rng, dim]() { return random_unit_vector(rng, dim); };
  return VectorModel(vec(), vec(), vec(), vec());
}

std::vector<double> random_unit_vector(SplitMix64& rng, int dim) {
  std::vector<double> v(dim);
  for (;;) {
    double norm2 = 0.0;
    for (double& c : v) {
      c = rng.next_gaussian();
      norm2 += c * c;
    }
    if (norm2 > 1e-24) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& c : v) c *= inv;
      return v;
    }
  }
}

CorrelationBlock random_block(std::uint64_t seed, BlockSampling mode) {
  switch (mode) {
    case BlockSampling::Cube: {
      SplitMix64 rng(seed);
      const double c11 = rng.next_symmetric();
      const double c12 = rng.next_symmetric();
      const double c21 = rng.next_symmetric();
      const double c22 = rng.next_symmetric();
      return CorrelationBlock(c11, c12, c21, c22);
    }
    case BlockSampling::Feasible:
      return correlations_from_vectors(random_vector_model(seed, 4)).block;
    case BlockSampling::Lhv:
      return correlations_from_lhv(random_lhv_model(seed)).block;
  }
  throw InvariantError("unknown block sampling mode");
}

}  // namespace chsh
