#pragma once

#include <cstdint>

#include "coneangle/symmat.hpp"

namespace coneangle {

/// splitmix64 generator: tiny, seedable, identical output on every
/// platform, which keeps sampled test fixtures reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform() {  // [0,1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(
                                                  hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline SymmetricMatrix random_symmetric(Rng& rng, int n, double lo = -1.0,
                                        double hi = 1.0) {
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = rng.uniform(lo, hi);
      a[static_cast<std::size_t>(i) * n + j] = v;
      a[static_cast<std::size_t>(j) * n + i] = v;
    }
  return SymmetricMatrix(n, std::move(a));
}

inline SymmetricMatrix random_nonneg(Rng& rng, int n) {
  return random_symmetric(rng, n, 0.0, 1.0);
}

inline SymmetricMatrix random_nonneg_zero_diag(Rng& rng, int n) {
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = rng.uniform();
      a[static_cast<std::size_t>(i) * n + j] = v;
      a[static_cast<std::size_t>(j) * n + i] = v;
    }
  return SymmetricMatrix(n, std::move(a));
}

/// G G^T for a square G with entries uniform in [-1,1).
inline SymmetricMatrix random_psd(Rng& rng, int n) {
  std::vector<double> g(static_cast<std::size_t>(n) * n);
  for (auto& v : g) v = rng.uniform(-1.0, 1.0);
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += g[static_cast<std::size_t>(i) * n + k] *
             g[static_cast<std::size_t>(j) * n + k];
      a[static_cast<std::size_t>(i) * n + j] = s;
      a[static_cast<std::size_t>(j) * n + i] = s;
    }
  return SymmetricMatrix(n, std::move(a));
}

}  // namespace coneangle
