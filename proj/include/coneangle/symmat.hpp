#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coneangle {

/// Raised when an iterative numerical routine fails to reach its tolerance.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense real symmetric matrix, row-major storage, immutable after
/// construction. The constructor rejects input whose asymmetry exceeds
/// 1e-9 relative to the largest entry and averages mirror entries of the
/// rest, so entries(i,j) == entries(j,i) holds exactly.
class SymmetricMatrix {
 public:
  SymmetricMatrix(int n, std::vector<double> row_major);

  static SymmetricMatrix zero(int n);
  static SymmetricMatrix identity(int n);
  static SymmetricMatrix diagonal(const std::vector<double>& d);

  int order() const { return n_; }
  double operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<double>& data() const { return a_; }

  double trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  double min_entry() const;
  bool is_zero() const;

  /// A padded with `extra` zero rows/columns (block-diagonal with 0).
  SymmetricMatrix padded(int extra) const;

 private:
  int n_;
  std::vector<double> a_;
};

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b);
SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b);
SymmetricMatrix operator-(const SymmetricMatrix& a);
SymmetricMatrix operator*(const SymmetricMatrix& a, double s);
SymmetricMatrix operator*(double s, const SymmetricMatrix& a);

/// max |a_ij - b_ij|; orders must match.
double max_abs_diff(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// <A,B> = sum_ij a_ij b_ij (= Tr AB for symmetric arguments).
double frobenius_inner(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Angle in [0, pi] between two nonzero matrices.
double angle(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Full symmetric eigendecomposition. `eigenvalues` is non-increasing and
/// column j of `vectors` is the matching unit eigenvector. `zero_threshold`
/// is the band used to classify eigenvalues as positive/negative/zero.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  std::vector<double> vectors;  // row-major n x n
  double zero_threshold = 0.0;

  int order() const { return static_cast<int>(eigenvalues.size()); }
  double vec(int i, int j) const {
    return vectors[static_cast<std::size_t>(i) * eigenvalues.size() + j];
  }
  int positive_count() const;
  int negative_count() const;
  int zero_count() const;
};

/// Cyclic-by-row Jacobi eigensolver. Converged when the off-diagonal
/// Frobenius norm drops below tol * max(1, ||A||); throws numerical_error
/// after 100 sweeps. Deterministic for fixed input. The returned
/// zero_threshold defaults to 1e-10 * n * max(1, ||A||).
EigenDecomposition eigh(const SymmetricMatrix& a, double tol = 1e-12);

/// One factor of the orthogonal split A = Q - P: sign >= 0 gives Q
/// (eigenvalues above the zero band), sign < 0 gives P (absolute values of
/// eigenvalues below it). zero_tol <= 0 uses dec.zero_threshold.
SymmetricMatrix spectral_part(const EigenDecomposition& dec, int sign,
                              double zero_tol = 0.0);

/// (Q, P) with A = Q - P, both positive semidefinite and <Q,P> ~ 0.
std::pair<SymmetricMatrix, SymmetricMatrix> spectral_split(
    const SymmetricMatrix& a, double zero_tol = 0.0);

/// (M, N) with M = max(A,0), N = max(-A,0) entrywise; exact.
std::pair<SymmetricMatrix, SymmetricMatrix> entrywise_split(
    const SymmetricMatrix& a);

/// Text format: line 1 is n, then n lines of n reals (scientific notation
/// accepted). write_matrix emits 17 significant digits so files re-parse to
/// bit-identical matrices.
SymmetricMatrix read_matrix(std::istream& in);
SymmetricMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const SymmetricMatrix& m);
void write_matrix_file(const std::string& path, const SymmetricMatrix& m);

}  // namespace coneangle
