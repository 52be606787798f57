#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace chsh {

// Thrown when the Jacobi sweep cap is hit; clean symmetric input always
// converges long before the cap, so this signals malformed entries (NaN/Inf).
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a factorization requires a PSD input and the minimum
// eigenvalue is below -tol.
struct NotPsdError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violation of a domain-type invariant (entry out of range, bad norm, ...).
struct InvariantError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr int kMaxDim = 8;
constexpr double kDefaultPsdTol = 1e-9;

// Dense real symmetric matrix of small fixed dimension. Symmetry is
// maintained structurally: set() writes both (i,j) and (j,i). Correlation
// matrices live at dim 2 and 4; dim 8 exists only as the real embedding of a
// 4x4 hermitian matrix.
class SymMatrix {
 public:
  explicit SymMatrix(int dim);

  static SymMatrix identity(int dim);
  // Builds from row-major entries; throws InvariantError unless the data is
  // exactly symmetric.
  static SymMatrix from_rows(int dim, const std::vector<double>& rows);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return a_[i * kMaxDim + j]; }
  void set(int i, int j, double v) {
    a_[i * kMaxDim + j] = v;
    a_[j * kMaxDim + i] = v;
  }

  double trace() const;
  double max_abs_diff(const SymMatrix& other) const;

 private:
  int dim_;
  std::array<double, kMaxDim * kMaxDim> a_{};
};

// Dense complex hermitian matrix; set() writes (i,j) and the conjugate at
// (j,i). Diagonal imaginary parts are forced to zero.
class HermMatrix {
 public:
  explicit HermMatrix(int dim);

  int dim() const { return dim_; }
  std::complex<double> operator()(int i, int j) const { return a_[i * kMaxDim + j]; }
  void set(int i, int j, std::complex<double> v);

  // Real symmetric embedding [[Re, -Im], [Im, Re]] of dimension 2*dim; its
  // spectrum is the hermitian spectrum with every eigenvalue doubled.
  SymMatrix real_embedding() const;

 private:
  int dim_;
  std::array<std::complex<double>, kMaxDim * kMaxDim> a_{};
};

struct EigenResult {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi eigendecomposition. Converges when the off-diagonal
// Frobenius norm drops below 1e-14; throws ConvergenceError after 100 sweeps.
EigenResult sym_eigen(const SymMatrix& m);

// Eigenvalues only (ascending); same iteration, skips accumulating vectors.
std::vector<double> sym_eigenvalues(const SymMatrix& m);

double min_eigenvalue(const SymMatrix& m);

bool is_psd(const SymMatrix& m, double tol = kDefaultPsdTol);

// Factors a PSD matrix into vectors v_i with v_i . v_j = m(i,j). Eigenvalues
// are clamped at zero, so boundary inputs (lambda_min == 0) do not error, and
// near-zero modes are dropped: rank-deficient inputs yield vectors of length
// rank < dim. Throws NotPsdError when lambda_min < -tol.
std::vector<std::vector<double>> gram_vectors(const SymMatrix& m, double tol = kDefaultPsdTol);

// Nearest PSD matrix in Frobenius norm: clamp negative eigenvalues, rebuild.
SymMatrix psd_project(const SymMatrix& m);

// Hermitian spectrum via the real embedding; the doubled eigenvalues are
// deduplicated by taking every second value of the ascending embedding list.
std::vector<double> herm_eigenvalues(const HermMatrix& m);

double herm_min_eigenvalue(const HermMatrix& m);

bool herm_is_psd(const HermMatrix& m, double tol = kDefaultPsdTol);

}  // namespace chsh
