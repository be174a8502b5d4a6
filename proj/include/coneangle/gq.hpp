#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coneangle/srg.hpp"

namespace coneangle {

/// Arithmetic in GF(q), q = p^e a prime power. Elements are encoded as
/// integers 0..q-1 whose base-p digits are the polynomial coefficients,
/// low degree first; all operations are table lookups. For e > 1 the
/// modulus is the first monic irreducible of degree e in that encoding
/// order, certified irreducible by exhaustive trial division.
class GaloisField {
 public:
  static GaloisField create(int q);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  /// Monic modulus coefficients, low degree first, length e+1.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int x, int y) const { return add_[idx(x, y)]; }
  int sub(int x, int y) const { return add_[idx(x, neg_[y])]; }
  int mul(int x, int y) const { return mul_[idx(x, y)]; }
  int neg(int x) const { return neg_[x]; }
  int inv(int x) const;

  std::vector<int> coeffs(int x) const;  // length e, low degree first
  int element(const std::vector<int>& coeffs) const;

 private:
  GaloisField() = default;
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x) * q_ + y;
  }

  int p_ = 0, e_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
};

/// Projective point: coordinates normalized so the first nonzero one is 1.
struct ProjectivePoint {
  std::vector<int> coords;
};

/// Point-line incidence structure of order (s,t) with its collinearity
/// graph. Points are listed in lexicographic order of their normalized
/// coordinates; lines are sorted point-index sets of size s+1.
struct QuadrangleStructure {
  int s = 0;
  int t = 0;
  GaloisField field;
  std::vector<ProjectivePoint> points;
  std::vector<std::vector<int>> lines;
  Graph adjacency;  // collinearity from the bilinear form
};

/// Symplectic quadrangle W(3,q) of order (q,q): all points of PG(3,q),
/// lines the totally isotropic lines of the alternating form
/// B(x,y) = x0 y1 - x1 y0 + x2 y3 - x3 y2.
QuadrangleStructure build_gq_symplectic(int q);

/// Elliptic quadric quadrangle Q-(5,q) of order (q,q^2): singular points
/// of Q(x) = x0 x1 + x2 x3 + x4^2 + alpha x4 x5 + beta x5^2 in PG(5,q),
/// where t^2 + alpha t + beta is the deterministic irreducible quadratic
/// over GF(q); lines are the totally singular lines. The pairing
/// B(u,v) = Q(u+v) - Q(u) - Q(v) works uniformly in all characteristics.
QuadrangleStructure build_gq_elliptic(int q);

/// Exhaustive check of the quadrangle axioms plus the order regularities:
/// s+1 points per line, t+1 lines per point, two lines share at most one
/// point, and every external point-line pair has exactly one collinear
/// point on the line. `detail` carries the first counterexample.
struct AxiomReport {
  bool ok = true;
  std::string detail;
};

AxiomReport gq_axiom_check(const QuadrangleStructure& gq);

/// Collinearity graph rebuilt from the line sets; must coincide edge for
/// edge with the form-based adjacency or a logic_error is thrown.
Graph collinearity_graph(const QuadrangleStructure& gq);

/// Human-readable dump: order, field, points with coordinates, lines.
void write_structure_report(std::ostream& out, const QuadrangleStructure& gq);

}  // namespace coneangle
