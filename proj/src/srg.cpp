#include "coneangle/srg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "coneangle/numbers.hpp"

namespace coneangle {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += "; ";
    s += p;
  }
  return s;
}

}  // namespace

Feasibility srg_feasible(const SrgParams& p) {
  Feasibility f;
  auto fail = [&](std::string s) {
    f.ok = false;
    f.reasons.push_back(std::move(s));
  };
  if (p.n > (1LL << 30)) fail("parameters out of supported range");
  if (!(p.k > 0 && p.k < p.n)) fail("need 0 < k < n");
  if (!(p.a >= 0 && p.a < p.k)) fail("need 0 <= a < k");
  if (!(p.c >= 0 && p.c <= p.k)) fail("need 0 <= c <= k");
  if (!f.ok) return f;

  if ((p.n - p.k - 1) * p.c != p.k * (p.k - p.a - 1))
    fail("(n-k-1)c = " + std::to_string((p.n - p.k - 1) * p.c) +
         " != k(k-a-1) = " + std::to_string(p.k * (p.k - p.a - 1)));

  if (p.c >= 1) {
    const long long diff = p.a - p.c;
    const long long delta = diff * diff + 4 * (p.k - p.c);
    const long long s2 = 2 * p.k + (p.n - 1) * diff;
    if (delta <= 0) {
      fail("degenerate discriminant");
    } else if (s2 == 0) {
      if ((p.n - 1) % 2 != 0) fail("multiplicities not integral");
    } else {
      long long r = 0;
      if (!perfect_square(delta, &r) || s2 % r != 0) {
        fail("multiplicities not integral");
      } else {
        const long long d = s2 / r;
        if ((p.n - 1 - d) % 2 != 0 || (p.n - 1 + d) % 2 != 0) {
          fail("multiplicities not integral");
        } else if ((p.n - 1 - d) / 2 <= 0 || (p.n - 1 + d) / 2 <= 0) {
          fail("multiplicities not positive");
        }
      }
    }
  }
  return f;
}

SrgSpectrum srg_spectrum(const SrgParams& p) {
  const Feasibility f = srg_feasible(p);
  if (!f.ok)
    throw std::invalid_argument("srg_spectrum: infeasible parameters: " +
                                join(f.reasons));
  if (p.c < 1)
    throw std::invalid_argument(
        "srg_spectrum: c = 0 (disconnected graph) is not supported");

  const long long diff = p.a - p.c;
  const long long delta = diff * diff + 4 * (p.k - p.c);
  const double sq = std::sqrt(static_cast<double>(delta));

  SrgSpectrum s;
  s.k = p.k;
  s.discriminant = delta;
  s.theta = (static_cast<double>(diff) + sq) / 2.0;
  s.tau = (static_cast<double>(diff) - sq) / 2.0;

  const long long s2 = 2 * p.k + (p.n - 1) * diff;
  long long root = 0;
  s.integral = perfect_square(delta, &root);
  if (s2 == 0) {
    s.m_theta = (p.n - 1) / 2;
    s.m_tau = (p.n - 1) / 2;
  } else {
    const long long d = s2 / root;  // feasibility guarantees integrality
    s.m_theta = (p.n - 1 - d) / 2;
    s.m_tau = (p.n - 1 + d) / 2;
  }
  if (s.integral) {
    s.theta_int = (diff + root) / 2;
    s.tau_int = (diff - root) / 2;
  }
  return s;
}

SrgAngle srg_angle(const SrgParams& p) {
  const SrgSpectrum s = srg_spectrum(p);
  SrgAngle r;
  const double ratio = static_cast<double>(s.m_tau) * s.tau * s.tau /
                       (static_cast<double>(p.n) * static_cast<double>(p.k));
  r.cosine = -std::sqrt(ratio);
  r.angle = std::acos(std::clamp(r.cosine, -1.0, 1.0));
  if (s.integral) {
    long long num = s.m_tau * s.tau_int * s.tau_int;
    long long den = p.n * p.k;
    const long long g = std::gcd(num, den);
    r.exact = true;
    r.cos2_num = num / g;
    r.cos2_den = den / g;
  }
  return r;
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw std::invalid_argument("Graph: order must be >= 1");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("Graph::add_edge: vertex out of range");
  if (i == j) throw std::invalid_argument("Graph::add_edge: self-loop");
  row(i)[j >> 6] |= std::uint64_t{1} << (j & 63);
  row(j)[i >> 6] |= std::uint64_t{1} << (i & 63);
}

int Graph::degree(int i) const {
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(row(i)[w]);
  return d;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (int i = 0; i < n_; ++i) total += degree(i);
  return total / 2;
}

int Graph::common_neighbors(int i, int j) const {
  int d = 0;
  const std::uint64_t* ri = row(i);
  const std::uint64_t* rj = row(j);
  for (int w = 0; w < words_; ++w) d += std::popcount(ri[w] & rj[w]);
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(static_cast<std::size_t>(edge_count()));
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) e.emplace_back(i, j);
  return e;
}

SymmetricMatrix Graph::adjacency_matrix() const {
  std::vector<double> a(static_cast<std::size_t>(n_) * n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) {
        a[static_cast<std::size_t>(i) * n_ + j] = 1.0;
        a[static_cast<std::size_t>(j) * n_ + i] = 1.0;
      }
  return SymmetricMatrix(n_, std::move(a));
}

SrgParams verify_srg(const Graph& g) {
  const int n = g.order();
  const int k = g.degree(0);
  for (int i = 1; i < n; ++i)
    if (g.degree(i) != k)
      throw std::invalid_argument(
          "verify_srg: not regular (vertex 0 has degree " + std::to_string(k) +
          ", vertex " + std::to_string(i) + " has degree " +
          std::to_string(g.degree(i)) + ")");
  long long a = -1, c = -1;
  int a_i = -1, a_j = -1, c_i = -1, c_j = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int common = g.common_neighbors(i, j);
      if (g.adjacent(i, j)) {
        if (a < 0) {
          a = common;
          a_i = i;
          a_j = j;
        } else if (common != a) {
          throw std::invalid_argument(
              "verify_srg: adjacent pairs (" + std::to_string(a_i) + "," +
              std::to_string(a_j) + ") and (" + std::to_string(i) + "," +
              std::to_string(j) + ") have " + std::to_string(a) + " and " +
              std::to_string(common) + " common neighbours");
        }
      } else {
        if (c < 0) {
          c = common;
          c_i = i;
          c_j = j;
        } else if (common != c) {
          throw std::invalid_argument(
              "verify_srg: non-adjacent pairs (" + std::to_string(c_i) + "," +
              std::to_string(c_j) + ") and (" + std::to_string(i) + "," +
              std::to_string(j) + ") have " + std::to_string(c) + " and " +
              std::to_string(common) + " common neighbours");
        }
      }
    }
  if (a < 0)
    throw std::invalid_argument("verify_srg: graph has no edges");
  if (c < 0)
    throw std::invalid_argument(
        "verify_srg: complete graph (no non-adjacent pairs)");
  return SrgParams{n, k, a, c};
}

namespace {

Graph cycle(int m) {
  Graph g(m);
  for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  return g;
}

Graph petersen() {
  // Vertices are the 2-subsets of {0..4} in lexicographic order; adjacent
  // iff disjoint (the Kneser graph K(5,2)).
  std::vector<std::pair<int, int>> subsets;
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y) subsets.emplace_back(x, y);
  Graph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      const auto& [a, b] = subsets[i];
      const auto& [x, y] = subsets[j];
      if (a != x && a != y && b != x && b != y) g.add_edge(i, j);
    }
  return g;
}

Graph complete_bipartite(int m) {
  Graph g(2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g.add_edge(i, m + j);
  return g;
}

}  // namespace

Graph build_named(const std::string& name, int m) {
  if (name == "C5") return cycle(5);
  if (name == "cycle") {
    if (m < 3) throw std::invalid_argument("build_named: cycle needs m >= 3");
    return cycle(m);
  }
  if (name == "petersen") return petersen();
  if (name == "K_mm") {
    if (m < 1) throw std::invalid_argument("build_named: K_mm needs m >= 1");
    return complete_bipartite(m);
  }
  if (name == "matching4") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    return g;
  }
  throw std::invalid_argument("build_named: unknown graph '" + name + "'");
}

Graph read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m))
    throw std::invalid_argument("edge list parse: expected 'n m' header");
  if (n < 1 || n > 30000)
    throw std::invalid_argument("edge list parse: unsupported vertex count");
  if (m < 0)
    throw std::invalid_argument("edge list parse: bad edge count");
  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    long long i = 0, j = 0;
    if (!(in >> i >> j))
      throw std::invalid_argument("edge list parse: truncated edge list");
    if (i < 0 || j <= i || j >= n)
      throw std::invalid_argument("edge list parse: edge " + std::to_string(i) +
                                  " " + std::to_string(j) +
                                  " violates 0 <= i < j < n");
    g.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open edge list file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto e = g.edges();
  out << g.order() << " " << e.size() << "\n";
  for (const auto& [i, j] : e) out << i << " " << j << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for write: " + path);
  write_edge_list(out, g);
}

}  // namespace coneangle
