#include "chshkit/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chsh {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw InvariantError("matrix dimension must be in [1, 8]");
  }
}

constexpr double kOffDiagonalTol = 1e-14;  // on the off-diagonal Frobenius norm
constexpr int kMaxSweeps = 100;

double off_diagonal_norm_sq(const double* a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      s += 2.0 * a[i * kMaxDim + j] * a[i * kMaxDim + j];
    }
  }
  return s;
}

inline void rotate(double* a, int i, int j, int k, int l, double s, double tau) {
  const double g = a[i * kMaxDim + j];
  const double h = a[k * kMaxDim + l];
  a[i * kMaxDim + j] = g - s * (h + g * tau);
  a[k * kMaxDim + l] = h + s * (g - h * tau);
}

// In-place cyclic Jacobi on the kMaxDim-strided buffer `a`; only the upper
// triangle is maintained. When `v` is non-null it accumulates the rotations,
// columns of v become eigenvectors.
void jacobi(double* a, double* v, int n) {
  if (v != nullptr) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) v[i * kMaxDim + j] = (i == j) ? 1.0 : 0.0;
    }
  }
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm_sq(a, n) < kOffDiagonalTol * kOffDiagonalTol) return;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * kMaxDim + q];
        const double g = 100.0 * std::abs(apq);
        if (apq == 0.0) continue;
        double app = a[p * kMaxDim + p];
        double aqq = a[q * kMaxDim + q];
        if (sweep > 3 && std::abs(app) + g == std::abs(app) &&
            std::abs(aqq) + g == std::abs(aqq)) {
          a[p * kMaxDim + q] = 0.0;
          continue;
        }
        const double h = aqq - app;
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double delta = t * apq;
        a[p * kMaxDim + p] = app - delta;
        a[q * kMaxDim + q] = aqq + delta;
        a[p * kMaxDim + q] = 0.0;
        for (int k = 0; k < p; ++k) rotate(a, k, p, k, q, s, tau);
        for (int k = p + 1; k < q; ++k) rotate(a, p, k, k, q, s, tau);
        for (int k = q + 1; k < n; ++k) rotate(a, p, k, q, k, s, tau);
        if (v != nullptr) {
          for (int k = 0; k < n; ++k) rotate(v, k, p, k, q, s, tau);
        }
      }
    }
  }
  // Negated comparison so NaN input (which never converges) lands here too.
  if (!(off_diagonal_norm_sq(a, n) < kOffDiagonalTol * kOffDiagonalTol)) {
    throw ConvergenceError("Jacobi eigensolver did not converge in 100 sweeps");
  }
}

}  // namespace

SymMatrix::SymMatrix(int dim) : dim_(dim) { check_dim(dim); }

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::from_rows(int dim, const std::vector<double>& rows) {
  check_dim(dim);
  if (static_cast<int>(rows.size()) != dim * dim) {
    throw InvariantError("from_rows: wrong number of entries");
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (!(rows[i * dim + j] == rows[j * dim + i])) {
        throw InvariantError("from_rows: entries are not symmetric");
      }
    }
  }
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) m.set(i, j, rows[i * dim + j]);
  }
  return m;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::max_abs_diff(const SymMatrix& other) const {
  double d = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) d = std::max(d, std::abs((*this)(i, j) - other(i, j)));
  }
  return d;
}

HermMatrix::HermMatrix(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim / 2) {
    throw InvariantError("hermitian dimension must be in [1, 4]");
  }
}

void HermMatrix::set(int i, int j, std::complex<double> v) {
  if (i == j) v = std::complex<double>(v.real(), 0.0);
  a_[i * kMaxDim + j] = v;
  a_[j * kMaxDim + i] = std::conj(v);
}

SymMatrix HermMatrix::real_embedding() const {
  SymMatrix e(2 * dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      const std::complex<double> z = (*this)(i, j);
      e.set(i, j, z.real());
      e.set(dim_ + i, dim_ + j, z.real());
      e.set(dim_ + i, j, z.imag());
      if (i != j) e.set(dim_ + j, i, -z.imag());
    }
  }
  return e;
}

EigenResult sym_eigen(const SymMatrix& m) {
  const int n = m.dim();
  std::array<double, kMaxDim * kMaxDim> a{};
  std::array<double, kMaxDim * kMaxDim> v{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * kMaxDim + j] = m(i, j);
  }
  jacobi(a.data(), v.data(), n);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a[x * kMaxDim + x] < a[y * kMaxDim + y]; });

  EigenResult r;
  r.values.resize(n);
  r.vectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    r.values[k] = a[order[k] * kMaxDim + order[k]];
    for (int i = 0; i < n; ++i) r.vectors[k][i] = v[i * kMaxDim + order[k]];
  }
  return r;
}

std::vector<double> sym_eigenvalues(const SymMatrix& m) {
  const int n = m.dim();
  std::array<double, kMaxDim * kMaxDim> a{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * kMaxDim + j] = m(i, j);
  }
  jacobi(a.data(), nullptr, n);
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = a[i * kMaxDim + i];
  std::sort(vals.begin(), vals.end());
  return vals;
}

double min_eigenvalue(const SymMatrix& m) {
  // Allocation-free: this sits inside grid scans with tens of millions of
  // calls per run.
  const int n = m.dim();
  std::array<double, kMaxDim * kMaxDim> a{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * kMaxDim + j] = m(i, j);
  }
  jacobi(a.data(), nullptr, n);
  double lo = a[0];
  for (int i = 1; i < n; ++i) lo = std::min(lo, a[i * kMaxDim + i]);
  return lo;
}

bool is_psd(const SymMatrix& m, double tol) { return min_eigenvalue(m) >= -tol; }

std::vector<std::vector<double>> gram_vectors(const SymMatrix& m, double tol) {
  const EigenResult eig = sym_eigen(m);
  const int n = m.dim();
  if (eig.values.front() < -tol) {
    throw NotPsdError("gram_vectors: matrix is not PSD within tolerance");
  }
  double scale = 1.0;
  for (double lam : eig.values) scale = std::max(scale, std::abs(lam));
  const double rank_tol = 1e-12 * scale;

  // Columns with clamped eigenvalue above rank_tol, largest first, so vector
  // coordinates are ordered by decreasing spectral weight.
  std::vector<int> keep;
  for (int k = n - 1; k >= 0; --k) {
    if (std::max(eig.values[k], 0.0) > rank_tol) keep.push_back(k);
  }
  std::vector<std::vector<double>> out(n, std::vector<double>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    const int k = keep[c];
    const double w = std::sqrt(std::max(eig.values[k], 0.0));
    for (int i = 0; i < n; ++i) out[i][c] = w * eig.vectors[k][i];
  }
  return out;
}

SymMatrix psd_project(const SymMatrix& m) {
  const EigenResult eig = sym_eigen(m);
  const int n = m.dim();
  SymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        s += std::max(eig.values[k], 0.0) * eig.vectors[k][i] * eig.vectors[k][j];
      }
      out.set(i, j, s);
    }
  }
  return out;
}

std::vector<double> herm_eigenvalues(const HermMatrix& m) {
  const std::vector<double> doubled = sym_eigenvalues(m.real_embedding());
  std::vector<double> vals;
  vals.reserve(m.dim());
  for (std::size_t k = 0; k < doubled.size(); k += 2) vals.push_back(doubled[k]);
  return vals;
}

double herm_min_eigenvalue(const HermMatrix& m) {
  return min_eigenvalue(m.real_embedding());
}

bool herm_is_psd(const HermMatrix& m, double tol) { return herm_min_eigenvalue(m) >= -tol; }

}  // namespace chsh
