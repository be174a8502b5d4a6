#include "coneangle/gq.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "coneangle/numbers.hpp"

namespace coneangle {

namespace {

using Coeffs = std::vector<int>;  // low degree first

Coeffs poly_trim(Coeffs v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, int p) {
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_trim(std::move(r));
}

// Remainder of num / den with den monic.
Coeffs poly_mod(Coeffs num, const Coeffs& den, int p) {
  num = poly_trim(std::move(num));
  while (num.size() >= den.size() && !(num.size() == 1 && num[0] == 0)) {
    const int lead = num.back();
    const std::size_t shift = num.size() - den.size();
    if (lead != 0)
      for (std::size_t i = 0; i < den.size(); ++i) {
        int& c = num[shift + i];
        c = ((c - lead * den[i]) % p + p) % p;
      }
    num.pop_back();
    num = poly_trim(std::move(num));
    if (num.size() < den.size()) break;
  }
  return num;
}

bool poly_is_zero(const Coeffs& v) {
  for (int c : v)
    if (c != 0) return false;
  return true;
}

// Monic polynomial of degree e over GF(p) whose low coefficients are the
// base-p digits of `index`.
Coeffs monic_from_index(long long index, int e, int p) {
  Coeffs f(e + 1, 0);
  for (int i = 0; i < e; ++i) {
    f[i] = static_cast<int>(index % p);
    index /= p;
  }
  f[e] = 1;
  return f;
}

bool is_irreducible(const Coeffs& f, int p) {
  const int e = static_cast<int>(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..e/2.
  for (int d = 1; 2 * d <= e; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      const Coeffs g = monic_from_index(idx, d, p);
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField GaloisField::create(int q) {
  long long p = 0;
  int e = 0;
  if (!is_prime_power(q, &p, &e))
    throw std::invalid_argument("GaloisField: " + std::to_string(q) +
                                " is not a prime power");
  if (q > 1024)
    throw std::invalid_argument("GaloisField: table construction capped at q <= 1024");

  GaloisField f;
  f.p_ = static_cast<int>(p);
  f.e_ = e;
  f.q_ = q;

  if (e == 1) {
    f.modulus_ = {0, 1};  // the polynomial t
  } else {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      Coeffs cand = monic_from_index(idx, e, f.p_);
      if (is_irreducible(cand, f.p_)) {
        f.modulus_ = std::move(cand);
        break;
      }
    }
    if (f.modulus_.empty())
      throw numerical_error("GaloisField: no irreducible modulus found");
  }

  const auto decode = [&](int x) {
    Coeffs c(e, 0);
    for (int i = 0; i < e; ++i) {
      c[i] = x % f.p_;
      x /= f.p_;
    }
    return c;
  };
  const auto encode = [&](const Coeffs& c) {
    int x = 0;
    for (int i = e - 1; i >= 0; --i)
      x = x * f.p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return x;
  };

  f.add_.assign(static_cast<std::size_t>(q) * q, 0);
  f.mul_.assign(static_cast<std::size_t>(q) * q, 0);
  f.neg_.assign(q, 0);
  f.inv_.assign(q, 0);

  for (int x = 0; x < q; ++x) {
    const Coeffs cx = decode(x);
    Coeffs nx(e, 0);
    for (int i = 0; i < e; ++i) nx[i] = (f.p_ - cx[i]) % f.p_;
    f.neg_[x] = encode(nx);
    for (int y = 0; y < q; ++y) {
      const Coeffs cy = decode(y);
      Coeffs sum(e, 0);
      for (int i = 0; i < e; ++i) sum[i] = (cx[i] + cy[i]) % f.p_;
      f.add_[f.idx(x, y)] = encode(sum);
      f.mul_[f.idx(x, y)] =
          encode(poly_mod(poly_mul(cx, cy, f.p_), f.modulus_, f.p_));
    }
  }
  for (int x = 1; x < q; ++x)
    for (int y = 1; y < q; ++y)
      if (f.mul_[f.idx(x, y)] == 1) {
        f.inv_[x] = y;
        break;
      }
  return f;
}

int GaloisField::inv(int x) const {
  if (x == 0) throw std::invalid_argument("GaloisField: inverse of zero");
  return inv_[x];
}

std::vector<int> GaloisField::coeffs(int x) const {
  std::vector<int> c(e_, 0);
  for (int i = 0; i < e_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

int GaloisField::element(const std::vector<int>& coeffs) const {
  int x = 0;
  for (int i = e_ - 1; i >= 0; --i) {
    const int c = i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0;
    if (c < 0 || c >= p_)
      throw std::invalid_argument("GaloisField: coefficient out of range");
    x = x * p_ + c;
  }
  return x;
}

namespace {

using Vec = std::vector<int>;

// All normalized projective points of PG(ncoords-1, q) in ascending
// lexicographic order of their coordinate tuples.
std::vector<Vec> projective_points(const GaloisField& f, int ncoords) {
  std::vector<Vec> pts;
  for (int lead = ncoords - 1; lead >= 0; --lead) {
    Vec c(ncoords, 0);
    c[lead] = 1;
    while (true) {
      pts.push_back(c);
      int pos = ncoords - 1;
      while (pos > lead && c[pos] == f.q() - 1) {
        c[pos] = 0;
        --pos;
      }
      if (pos == lead) break;
      ++c[pos];
    }
  }
  return pts;
}

Vec normalize(const GaloisField& f, Vec v) {
  int lead = -1;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      lead = static_cast<int>(i);
      break;
    }
  if (lead < 0) throw std::logic_error("normalize: zero vector");
  const int s = f.inv(v[lead]);
  for (auto& c : v) c = f.mul(c, s);
  return v;
}

long long coord_key(const GaloisField& f, const Vec& v) {
  long long key = 0;
  for (int c : v) key = key * f.q() + c;
  return key;
}

Vec vec_add_scaled(const GaloisField& f, const Vec& u, int t, const Vec& v) {
  Vec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    w[i] = f.add(u[i], f.mul(t, v[i]));
  return w;
}

// Shared assembly: filter candidate points, compute adjacency from the
// pairing, then close every uncovered collinear pair into the point set of
// its spanned line.
QuadrangleStructure assemble(GaloisField field, int ncoords, int s, int t,
                             const std::function<bool(const Vec&)>& is_point,
                             const std::function<bool(const Vec&, const Vec&)>&
                                 collinear) {
  std::vector<ProjectivePoint> points;
  for (auto& v : projective_points(field, ncoords))
    if (is_point(v)) points.push_back(ProjectivePoint{std::move(v)});

  const int n = static_cast<int>(points.size());
  const long long expected_points =
      static_cast<long long>(s + 1) * (static_cast<long long>(s) * t + 1);
  if (n != expected_points)
    throw std::logic_error("quadrangle construction: found " +
                           std::to_string(n) + " points, expected " +
                           std::to_string(expected_points));

  long long key_space = 1;
  for (int i = 0; i < ncoords; ++i) key_space *= field.q();
  std::vector<int> index_of(static_cast<std::size_t>(key_space), -1);
  for (int i = 0; i < n; ++i)
    index_of[static_cast<std::size_t>(coord_key(field, points[i].coords))] = i;

  Graph adjacency(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (collinear(points[i].coords, points[j].coords)) adjacency.add_edge(i, j);

  // Lines: for every collinear pair not yet covered, take all q+1 points of
  // span{u,v}; the quadrangle axioms make each pair lie on one line only.
  std::vector<std::vector<int>> lines;
  const int words = (n + 63) / 64;
  std::vector<std::uint64_t> covered(static_cast<std::size_t>(n) * words, 0);
  const auto is_covered = [&](int i, int j) {
    return (covered[static_cast<std::size_t>(i) * words + (j >> 6)] >>
            (j & 63)) &
           1u;
  };
  const auto mark = [&](int i, int j) {
    covered[static_cast<std::size_t>(i) * words + (j >> 6)] |=
        std::uint64_t{1} << (j & 63);
    covered[static_cast<std::size_t>(j) * words + (i >> 6)] |=
        std::uint64_t{1} << (i & 63);
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!adjacency.adjacent(i, j) || is_covered(i, j)) continue;
      std::vector<int> line;
      line.push_back(j);  // v itself, then u + t v over all t
      for (int tt = 0; tt < field.q(); ++tt) {
        const Vec w = normalize(
            field, vec_add_scaled(field, points[i].coords, tt, points[j].coords));
        const int idx =
            index_of[static_cast<std::size_t>(coord_key(field, w))];
        if (idx < 0)
          throw std::logic_error(
              "quadrangle construction: span point missing from point set");
        line.push_back(idx);
      }
      std::sort(line.begin(), line.end());
      if (std::adjacent_find(line.begin(), line.end()) != line.end() ||
          static_cast<int>(line.size()) != s + 1)
        throw std::logic_error(
            "quadrangle construction: span is not a line of size s+1");
      for (std::size_t x = 0; x < line.size(); ++x)
        for (std::size_t y = x + 1; y < line.size(); ++y) {
          if (!adjacency.adjacent(line[x], line[y]))
            throw std::logic_error(
                "quadrangle construction: line is not a clique");
          mark(line[x], line[y]);
        }
      lines.push_back(std::move(line));
    }

  const long long expected_lines =
      static_cast<long long>(t + 1) * (static_cast<long long>(s) * t + 1);
  if (static_cast<long long>(lines.size()) != expected_lines)
    throw std::logic_error("quadrangle construction: found " +
                           std::to_string(lines.size()) + " lines, expected " +
                           std::to_string(expected_lines));

  return QuadrangleStructure{s, t, std::move(field), std::move(points),
                             std::move(lines), std::move(adjacency)};
}

void check_construction_bound(int q) {
  if (q < 2) throw std::invalid_argument("quadrangle: q must be >= 2");
  if (q > 8)
    throw std::invalid_argument(
        "quadrangle: construction supported for q <= 8 (use the analytic "
        "formulas beyond)");
}

}  // namespace

QuadrangleStructure build_gq_symplectic(int q) {
  check_construction_bound(q);
  GaloisField f = GaloisField::create(q);
  const auto form = [f](const Vec& x, const Vec& y) {
    const int t1 = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
    const int t2 = f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2]));
    return f.add(t1, t2);
  };
  const auto all = [](const Vec&) { return true; };
  const auto collinear = [form](const Vec& u, const Vec& v) {
    return form(u, v) == 0;
  };
  return assemble(f, 4, q, q, all, collinear);
}

QuadrangleStructure build_gq_elliptic(int q) {
  check_construction_bound(q);
  GaloisField f = GaloisField::create(q);

  // First irreducible t^2 + alpha t + beta over GF(q), scanning
  // (beta, alpha) by element index with beta least significant.
  int alpha = -1, beta = -1;
  for (int idx = 0; idx < q * q && alpha < 0; ++idx) {
    const int b = idx % q, a = idx / q;
    bool has_root = false;
    for (int x = 0; x < q && !has_root; ++x)
      has_root = f.add(f.add(f.mul(x, x), f.mul(a, x)), b) == 0;
    if (!has_root) {
      alpha = a;
      beta = b;
    }
  }
  if (alpha < 0)
    throw numerical_error("quadrangle: no irreducible quadratic found");

  const auto quadform = [f, alpha, beta](const Vec& x) {
    int s = f.add(f.mul(x[0], x[1]), f.mul(x[2], x[3]));
    s = f.add(s, f.mul(x[4], x[4]));
    s = f.add(s, f.mul(alpha, f.mul(x[4], x[5])));
    s = f.add(s, f.mul(beta, f.mul(x[5], x[5])));
    return s;
  };
  const auto singular = [quadform](const Vec& x) { return quadform(x) == 0; };
  // Polarization B(u,v) = Q(u+v) - Q(u) - Q(v); valid in characteristic 2 as
  // well, where the form is alternating.
  const auto collinear = [f, quadform](const Vec& u, const Vec& v) {
    Vec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = f.add(u[i], v[i]);
    const int b =
        f.sub(f.sub(quadform(w), quadform(u)), quadform(v));
    return b == 0;
  };
  return assemble(f, 6, q, q * q, singular, collinear);
}

AxiomReport gq_axiom_check(const QuadrangleStructure& gq) {
  const int n = static_cast<int>(gq.points.size());
  const int s = gq.s, t = gq.t;

  std::vector<int> lines_per_point(n, 0);
  for (std::size_t li = 0; li < gq.lines.size(); ++li) {
    const auto& line = gq.lines[li];
    if (static_cast<int>(line.size()) != s + 1)
      return {false, "line " + std::to_string(li) + " has " +
                         std::to_string(line.size()) + " points, expected " +
                         std::to_string(s + 1)};
    for (int v : line) ++lines_per_point[v];
  }
  for (int v = 0; v < n; ++v)
    if (lines_per_point[v] != t + 1)
      return {false, "point " + std::to_string(v) + " lies on " +
                         std::to_string(lines_per_point[v]) +
                         " lines, expected " + std::to_string(t + 1)};

  for (std::size_t i = 0; i < gq.lines.size(); ++i)
    for (std::size_t j = i + 1; j < gq.lines.size(); ++j) {
      // Lines are sorted index vectors; count the merge intersection.
      const auto& a = gq.lines[i];
      const auto& b = gq.lines[j];
      int shared = 0;
      for (std::size_t x = 0, y = 0; x < a.size() && y < b.size();) {
        if (a[x] < b[y])
          ++x;
        else if (a[x] > b[y])
          ++y;
        else {
          ++shared;
          ++x;
          ++y;
        }
      }
      if (shared > 1)
        return {false, "lines " + std::to_string(i) + " and " +
                           std::to_string(j) + " meet in " +
                           std::to_string(shared) + " points"};
    }

  for (int u = 0; u < n; ++u)
    for (std::size_t li = 0; li < gq.lines.size(); ++li) {
      const auto& line = gq.lines[li];
      if (std::binary_search(line.begin(), line.end(), u)) continue;
      int collinear_on_line = 0;
      for (int v : line) collinear_on_line += gq.adjacency.adjacent(u, v);
      if (collinear_on_line != 1)
        return {false, "point " + std::to_string(u) + " off line " +
                           std::to_string(li) + " sees " +
                           std::to_string(collinear_on_line) +
                           " collinear points on it, expected 1"};
    }
  return {true, ""};
}

Graph collinearity_graph(const QuadrangleStructure& gq) {
  Graph g(static_cast<int>(gq.points.size()));
  for (const auto& line : gq.lines)
    for (std::size_t x = 0; x < line.size(); ++x)
      for (std::size_t y = x + 1; y < line.size(); ++y)
        if (!g.adjacent(line[x], line[y])) g.add_edge(line[x], line[y]);
  if (!(g == gq.adjacency))
    throw std::logic_error(
        "collinearity_graph: line-based adjacency disagrees with the "
        "form-based adjacency");
  return g;
}

void write_structure_report(std::ostream& out, const QuadrangleStructure& gq) {
  out << "generalized quadrangle of order (s,t) = (" << gq.s << "," << gq.t
      << ")\n";
  out << "field GF(" << gq.field.q() << ") = GF(" << gq.field.p() << "^"
      << gq.field.e() << "), modulus coefficients (low to high):";
  for (int c : gq.field.modulus()) out << " " << c;
  out << "\n";
  out << "points: " << gq.points.size() << "  lines: " << gq.lines.size()
      << "\n";
  for (std::size_t i = 0; i < gq.points.size(); ++i) {
    out << "point " << i << ": (";
    for (std::size_t j = 0; j < gq.points[i].coords.size(); ++j)
      out << (j ? " " : "") << gq.points[i].coords[j];
    out << ")\n";
  }
  for (std::size_t i = 0; i < gq.lines.size(); ++i) {
    out << "line " << i << ":";
    for (int v : gq.lines[i]) out << " " << v;
    out << "\n";
  }
}

}  // namespace coneangle
