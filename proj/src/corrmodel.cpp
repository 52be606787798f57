#include "chshkit/corrmodel.hpp"

#include <algorithm>
#include <cmath>

namespace chsh {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_entry(double v) {
  if (!(std::abs(v) <= 1.0 + kEntryTol)) {
    throw InvariantError("correlation entry out of [-1, 1]");
  }
}

int sign_bit(int k, int bit) { return (k >> bit) & 1 ? 1 : -1; }

}  // namespace

CorrelationBlock::CorrelationBlock(double c11, double c12, double c21, double c22)
    : c_{{{c11, c12}, {c21, c22}}} {
  for (const auto& row : c_) {
    for (double v : row) check_entry(v);
  }
}

CorrelationBlock::CorrelationBlock(const std::array<std::array<double, 2>, 2>& c)
    : CorrelationBlock(c[0][0], c[0][1], c[1][0], c[1][1]) {}

SymMatrix FullCorrelationMatrix::real_matrix() const {
  if (mode != Mode::Real) {
    throw InvariantError("real_matrix() called on a hermitian-mode matrix");
  }
  SymMatrix m = SymMatrix::identity(4);
  m.set(0, 1, x.real());
  m.set(2, 3, y.real());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m.set(i, 2 + j, block(i, j));
  }
  return m;
}

HermMatrix FullCorrelationMatrix::herm_matrix() const {
  HermMatrix m(4);
  for (int i = 0; i < 4; ++i) m.set(i, i, 1.0);
  m.set(0, 1, x);
  m.set(2, 3, y);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m.set(i, 2 + j, block(i, j));
  }
  return m;
}

FullCorrelationMatrix assemble_full(const CorrelationBlock& block, double x, double y) {
  if (!(std::abs(x) <= 1.0 + kEntryTol) || !(std::abs(y) <= 1.0 + kEntryTol)) {
    throw InvariantError("assemble_full: |x| and |y| must be <= 1");
  }
  return FullCorrelationMatrix{block, x, y, Mode::Real};
}

FullCorrelationMatrix assemble_full_hermitian(const CorrelationBlock& block,
                                              std::complex<double> x,
                                              std::complex<double> y) {
  if (!(std::abs(x) <= 1.0 + kEntryTol) || !(std::abs(y) <= 1.0 + kEntryTol)) {
    throw InvariantError("assemble_full_hermitian: |x| and |y| must be <= 1");
  }
  return FullCorrelationMatrix{block, x, y, Mode::Hermitian};
}

double chsh_value(const CorrelationBlock& c) {
  return c(0, 0) + c(0, 1) + c(1, 0) - c(1, 1);
}

double chsh_via_hadamard(const CorrelationBlock& c) {
  const double h[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
  double tr = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) tr += c(i, k) * h[k][i];
  }
  return std::sqrt(2.0) * std::abs(tr);
}

ChshVariants chsh_all_variants(const CorrelationBlock& c) {
  ChshVariants out{};
  int n = 0;
  for (int minus = 0; minus < 4; ++minus) {
    double s = 0.0;
    for (int e = 0; e < 4; ++e) {
      const double v = c(e / 2, e % 2);
      s += (e == minus) ? -v : v;
    }
    out.values[n++] = s;
    out.values[n++] = -s;
  }
  out.max = *std::max_element(out.values.begin(), out.values.end());
  return out;
}

ChshReport chsh_report(const CorrelationBlock& block) {
  const ChshVariants var = chsh_all_variants(block);
  const double s = chsh_value(block);
  return ChshReport{
      s, std::abs(s), var.values, var.max,
      var.max <= 2.0 + kBoundaryTol,
      var.max <= kTsirelson + kBoundaryTol,
  };
}

std::pair<SymMatrix, SymMatrix> r_matrices() {
  SymMatrix plus = SymMatrix::identity(4);
  SymMatrix minus = SymMatrix::identity(4);
  const double h[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      plus.set(i, 2 + j, h[i][j]);
      minus.set(i, 2 + j, -h[i][j]);
    }
  }
  return {plus, minus};
}

std::pair<double, double> r_certificate(const CorrelationBlock& block) {
  const double s = chsh_value(block);
  return {4.0 + std::sqrt(2.0) * s, 4.0 - std::sqrt(2.0) * s};
}

bool tsirelson_check(const CorrelationBlock& block) {
  return chsh_all_variants(block).max <= kTsirelson + kBoundaryTol;
}

bool is_local(const CorrelationBlock& block) {
  return chsh_all_variants(block).max <= 2.0 + kBoundaryTol;
}

double strategy_correlation(int k, int i, int j) {
  const int a = sign_bit(k, 3 - i);
  const int b = sign_bit(k, 1 - j);
  return static_cast<double>(a * b);
}

double strategy_x(int k) { return static_cast<double>(sign_bit(k, 3) * sign_bit(k, 2)); }
double strategy_y(int k) { return static_cast<double>(sign_bit(k, 1) * sign_bit(k, 0)); }

namespace {

// Phase-1 primal simplex for  A w = b, w >= 0  with A 5x16. Artificial
// variables start basic; Bland's rule, so termination is guaranteed at this
// size. Returns false when the artificial objective stays positive.
constexpr int kRows = 5;
constexpr int kVars = 16;
constexpr double kPivotEps = 1e-11;

bool phase1_simplex(const std::array<std::array<double, kVars>, kRows>& a_in,
                    const std::array<double, kRows>& b_in,
                    std::array<double, kVars>& w_out) {
  constexpr int kCols = kVars + kRows;  // structural + artificial
  double tab[kRows][kCols + 1];
  int basis[kRows];

  for (int i = 0; i < kRows; ++i) {
    const double flip = (b_in[i] < 0.0) ? -1.0 : 1.0;
    for (int j = 0; j < kVars; ++j) tab[i][j] = flip * a_in[i][j];
    for (int j = 0; j < kRows; ++j) tab[i][kVars + j] = (i == j) ? 1.0 : 0.0;
    tab[i][kCols] = flip * b_in[i];
    basis[i] = kVars + i;
  }

  // Reduced-cost row for min sum(artificials), in canonical form w.r.t. the
  // artificial basis: z[j] = -sum_i tab[i][j] for structural j.
  double z[kCols + 1];
  for (int j = 0; j <= kCols; ++j) {
    double s = 0.0;
    for (int i = 0; i < kRows; ++i) s += tab[i][j];
    z[j] = -s;
  }
  for (int j = kVars; j < kCols; ++j) z[j] = 0.0;

  for (int iter = 0; iter < 10000; ++iter) {
    int enter = -1;
    for (int j = 0; j < kCols; ++j) {
      if (z[j] < -kPivotEps) {
        enter = j;
        break;  // Bland: lowest index
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < kRows; ++i) {
      if (tab[i][enter] > kPivotEps) {
        const double ratio = tab[i][kCols] / tab[i][enter];
        if (leave < 0 || ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) break;  // unbounded cannot happen here; objective >= 0

    const double piv = tab[leave][enter];
    for (int j = 0; j <= kCols; ++j) tab[leave][j] /= piv;
    for (int i = 0; i < kRows; ++i) {
      if (i == leave) continue;
      const double f = tab[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j <= kCols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    const double fz = z[enter];
    if (fz != 0.0) {
      for (int j = 0; j <= kCols; ++j) z[j] -= fz * tab[leave][j];
    }
    basis[leave] = enter;
  }

  double objective = 0.0;
  for (int i = 0; i < kRows; ++i) {
    if (basis[i] >= kVars) objective += tab[i][kCols];
  }
  if (objective > 1e-9) return false;

  w_out.fill(0.0);
  for (int i = 0; i < kRows; ++i) {
    if (basis[i] < kVars) w_out[basis[i]] = std::max(tab[i][kCols], 0.0);
  }
  return true;
}

}  // namespace

LocalDecomposition local_decomposition(const CorrelationBlock& block) {
  std::array<std::array<double, kVars>, kRows> a{};
  for (int k = 0; k < kVars; ++k) {
    a[0][k] = strategy_correlation(k, 0, 0);
    a[1][k] = strategy_correlation(k, 0, 1);
    a[2][k] = strategy_correlation(k, 1, 0);
    a[3][k] = strategy_correlation(k, 1, 1);
    a[4][k] = 1.0;
  }
  const std::array<double, kRows> b = {block(0, 0), block(0, 1), block(1, 0), block(1, 1), 1.0};

  LocalDecomposition out{};
  out.feasible = phase1_simplex(a, b, out.weights);
  if (!out.feasible) out.weights.fill(0.0);
  return out;
}

}  // namespace chsh
