#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "coneangle/symmat.hpp"

namespace coneangle {

/// (n, k, a, c): vertices, degree, common neighbours of adjacent pairs,
/// common neighbours of non-adjacent pairs.
struct SrgParams {
  long long n = 0;
  long long k = 0;
  long long a = 0;
  long long c = 0;
};

struct Feasibility {
  bool ok = true;
  std::vector<std::string> reasons;
};

/// Structural feasibility: basic bounds, the double-counting identity
/// (n-k-1)c = k(k-a-1), and integral positive multiplicities (connected
/// case c >= 1). Never throws; failures are listed in `reasons`.
Feasibility srg_feasible(const SrgParams& p);

/// Eigenvalues of a connected strongly regular graph from its parameters:
/// k simple, theta = ((a-c)+sqrt(D))/2 and tau = ((a-c)-sqrt(D))/2 with
/// D = (a-c)^2 + 4(k-c) and integral multiplicities m_theta, m_tau.
/// Throws on infeasible parameters and on c = 0 (disconnected).
struct SrgSpectrum {
  long long k = 0;
  double theta = 0.0;
  long long m_theta = 0;
  double tau = 0.0;
  long long m_tau = 0;
  long long discriminant = 0;
  bool integral = false;  // theta, tau are integers (D a perfect square)
  long long theta_int = 0;
  long long tau_int = 0;
};

SrgSpectrum srg_spectrum(const SrgParams& p);

/// Maximal PSD-cone angle of the adjacency matrix, straight from the
/// parameters: cos = -sqrt(m_tau tau^2 / (n k)). When tau is integral the
/// squared cosine is also reported as a reduced fraction.
struct SrgAngle {
  double cosine = 0.0;
  double angle = 0.0;
  bool exact = false;
  long long cos2_num = 0;
  long long cos2_den = 0;
};

SrgAngle srg_angle(const SrgParams& p);

/// Simple undirected graph, adjacency kept as bit-packed rows so that
/// common-neighbour counts are word-parallel popcounts.
class Graph {
 public:
  explicit Graph(int n);

  int order() const { return n_; }
  void add_edge(int i, int j);
  bool adjacent(int i, int j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }
  int degree(int i) const;
  long long edge_count() const;
  int common_neighbors(int i, int j) const;
  std::vector<std::pair<int, int>> edges() const;  // i < j, sorted
  SymmetricMatrix adjacency_matrix() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  const std::uint64_t* row(int i) const {
    return bits_.data() + static_cast<std::size_t>(i) * words_;
  }
  std::uint64_t* row(int i) {
    return bits_.data() + static_cast<std::size_t>(i) * words_;
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

/// Certifies that g is strongly regular and returns its parameters, by
/// checking regularity and the common-neighbour counts of every vertex
/// pair in integer arithmetic (equivalent to A^2 = kI + aA + c(J-I-A)).
/// Throws std::invalid_argument naming a witness pair on failure.
SrgParams verify_srg(const Graph& g);

/// Named builders with deterministic vertex order:
///   "C5"                 pentagon
///   "cycle" (m >= 3)     cycle C_m, vertices 0..m-1 in ring order
///   "petersen"           Petersen graph (2-subsets of {0..4}, disjointness)
///   "K_mm" (m >= 1)      complete bipartite K_{m,m}, parts 0..m-1 / m..2m-1
///   "matching4"          two disjoint edges (0,1) and (2,3)
Graph build_named(const std::string& name, int m = 0);

/// Edge-list text format: "n m" header, then m lines "i j" with
/// 0-based endpoints and i < j.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace coneangle
