#include "coneangle/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace coneangle {

SymmetricMatrix::SymmetricMatrix(int n, std::vector<double> row_major)
    : n_(n), a_(std::move(row_major)) {
  if (n_ < 1) throw std::invalid_argument("SymmetricMatrix: order must be >= 1");
  if (a_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("SymmetricMatrix: expected n*n entries");
  double scale = 0.0;
  for (double v : a_) {
    if (!std::isfinite(v))
      throw std::invalid_argument("SymmetricMatrix: non-finite entry");
    scale = std::max(scale, std::abs(v));
  }
  double asym = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      asym = std::max(asym, std::abs((*this)(i, j) - (*this)(j, i)));
  if (asym > 1e-9 * scale)
    throw std::invalid_argument("SymmetricMatrix: input is not symmetric");
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const double m = 0.5 * ((*this)(i, j) + (*this)(j, i));
      a_[static_cast<std::size_t>(i) * n_ + j] = m;
      a_[static_cast<std::size_t>(j) * n_ + i] = m;
    }
}

SymmetricMatrix SymmetricMatrix::zero(int n) {
  return SymmetricMatrix(n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0));
}

SymmetricMatrix SymmetricMatrix::identity(int n) {
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = 1.0;
  return SymmetricMatrix(n, std::move(a));
}

SymmetricMatrix SymmetricMatrix::diagonal(const std::vector<double>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = d[i];
  return SymmetricMatrix(n, std::move(a));
}

double SymmetricMatrix::trace() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double SymmetricMatrix::max_abs() const {
  double s = 0.0;
  for (double v : a_) s = std::max(s, std::abs(v));
  return s;
}

double SymmetricMatrix::min_entry() const {
  double s = a_[0];
  for (double v : a_) s = std::min(s, v);
  return s;
}

bool SymmetricMatrix::is_zero() const {
  for (double v : a_)
    if (v != 0.0) return false;
  return true;
}

SymmetricMatrix SymmetricMatrix::padded(int extra) const {
  if (extra < 0) throw std::invalid_argument("padded: extra must be >= 0");
  const int m = n_ + extra;
  std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      a[static_cast<std::size_t>(i) * m + j] = (*this)(i, j);
  return SymmetricMatrix(m, std::move(a));
}

namespace {

std::vector<double> zip(const SymmetricMatrix& a, const SymmetricMatrix& b,
                        double sb) {
  if (a.order() != b.order())
    throw std::invalid_argument("matrix arithmetic: order mismatch");
  std::vector<double> r(a.data().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.data()[i] + sb * b.data()[i];
  return r;
}

}  // namespace

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  return SymmetricMatrix(a.order(), zip(a, b, 1.0));
}

SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  return SymmetricMatrix(a.order(), zip(a, b, -1.0));
}

SymmetricMatrix operator-(const SymmetricMatrix& a) { return a * -1.0; }

SymmetricMatrix operator*(const SymmetricMatrix& a, double s) {
  std::vector<double> r(a.data().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * a.data()[i];
  return SymmetricMatrix(a.order(), std::move(r));
}

SymmetricMatrix operator*(double s, const SymmetricMatrix& a) { return a * s; }

double max_abs_diff(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("max_abs_diff: order mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double frobenius_inner(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("frobenius_inner: order mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    s += a.data()[i] * b.data()[i];
  return s;
}

double angle(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("angle: zero matrix argument");
  const double c =
      frobenius_inner(a, b) / (a.frobenius_norm() * b.frobenius_norm());
  return std::acos(std::clamp(c, -1.0, 1.0));
}

int EigenDecomposition::positive_count() const {
  int c = 0;
  for (double v : eigenvalues) c += v > zero_threshold;
  return c;
}

int EigenDecomposition::negative_count() const {
  int c = 0;
  for (double v : eigenvalues) c += v < -zero_threshold;
  return c;
}

int EigenDecomposition::zero_count() const {
  return order() - positive_count() - negative_count();
}

EigenDecomposition eigh(const SymmetricMatrix& input, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("eigh: tol must be > 0");
  const int n = input.order();
  std::vector<double> a = input.data();
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  const double norm_a = input.frobenius_norm();
  const double conv = tol * std::max(1.0, norm_a);
  // Rotations below this cannot keep the off-diagonal norm above conv.
  const double skip = conv / (2.0 * n);

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double x = a[static_cast<std::size_t>(i) * n + j];
        s += 2.0 * x * x;
      }
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > conv) {
    if (++sweep > 100)
      throw numerical_error("eigh: no convergence within 100 Jacobi sweeps");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[static_cast<std::size_t>(p) * n + q];
        if (std::abs(apq) <= skip) continue;
        const double app = a[static_cast<std::size_t>(p) * n + p];
        const double aqq = a[static_cast<std::size_t>(q) * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e10) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
        a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
        a[static_cast<std::size_t>(p) * n + q] = 0.0;
        a[static_cast<std::size_t>(q) * n + p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[static_cast<std::size_t>(r) * n + p];
          const double arq = a[static_cast<std::size_t>(r) * n + q];
          const double np = c * arp - s * arq;
          const double nq = s * arp + c * arq;
          a[static_cast<std::size_t>(r) * n + p] = np;
          a[static_cast<std::size_t>(p) * n + r] = np;
          a[static_cast<std::size_t>(r) * n + q] = nq;
          a[static_cast<std::size_t>(q) * n + r] = nq;
        }
        for (int r = 0; r < n; ++r) {
          const double vrp = v[static_cast<std::size_t>(r) * n + p];
          const double vrq = v[static_cast<std::size_t>(r) * n + q];
          v[static_cast<std::size_t>(r) * n + p] = c * vrp - s * vrq;
          v[static_cast<std::size_t>(r) * n + q] = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
    return a[static_cast<std::size_t>(x) * n + x] >
           a[static_cast<std::size_t>(y) * n + y];
  });

  EigenDecomposition dec;
  dec.eigenvalues.resize(n);
  dec.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    dec.eigenvalues[j] = a[static_cast<std::size_t>(idx[j]) * n + idx[j]];
    for (int i = 0; i < n; ++i)
      dec.vectors[static_cast<std::size_t>(i) * n + j] =
          v[static_cast<std::size_t>(i) * n + idx[j]];
  }
  dec.zero_threshold = 1e-10 * n * std::max(1.0, norm_a);
  return dec;
}

SymmetricMatrix spectral_part(const EigenDecomposition& dec, int sign,
                              double zero_tol) {
  const int n = dec.order();
  const double zt = zero_tol > 0.0 ? zero_tol : dec.zero_threshold;
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    const double lam = dec.eigenvalues[j];
    double w;
    if (sign >= 0) {
      if (!(lam > zt)) continue;
      w = lam;
    } else {
      if (!(lam < -zt)) continue;
      w = -lam;
    }
    for (int i = 0; i < n; ++i) {
      const double wi = w * dec.vec(i, j);
      for (int k = i; k < n; ++k)
        m[static_cast<std::size_t>(i) * n + k] += wi * dec.vec(k, j);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      m[static_cast<std::size_t>(k) * n + i] =
          m[static_cast<std::size_t>(i) * n + k];
  return SymmetricMatrix(n, std::move(m));
}

std::pair<SymmetricMatrix, SymmetricMatrix> spectral_split(
    const SymmetricMatrix& a, double zero_tol) {
  const EigenDecomposition dec = eigh(a);
  return {spectral_part(dec, +1, zero_tol), spectral_part(dec, -1, zero_tol)};
}

std::pair<SymmetricMatrix, SymmetricMatrix> entrywise_split(
    const SymmetricMatrix& a) {
  const int n = a.order();
  std::vector<double> m(a.data().size(), 0.0), neg(a.data().size(), 0.0);
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const double v = a.data()[i];
    if (v > 0.0)
      m[i] = v;
    else if (v < 0.0)
      neg[i] = -v;
  }
  return {SymmetricMatrix(n, std::move(m)), SymmetricMatrix(n, std::move(neg))};
}

SymmetricMatrix read_matrix(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) throw std::invalid_argument("matrix parse: missing order");
  if (n < 1 || n > 4096)
    throw std::invalid_argument("matrix parse: unsupported order " +
                                std::to_string(n));
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (auto& v : a)
    if (!(in >> v))
      throw std::invalid_argument("matrix parse: expected n*n real entries");
  return SymmetricMatrix(static_cast<int>(n), std::move(a));
}

SymmetricMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const SymmetricMatrix& m) {
  const int n = m.order();
  out << n << "\n";
  char buf[40];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << (j ? " " : "") << buf;
    }
    out << "\n";
  }
}

void write_matrix_file(const std::string& path, const SymmetricMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for write: " + path);
  write_matrix(out, m);
}

}  // namespace coneangle
