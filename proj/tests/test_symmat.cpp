#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coneangle/rng.hpp"
#include "coneangle/symmat.hpp"

using namespace coneangle;

namespace {

constexpr double kPi = 3.14159265358979323846;

SymmetricMatrix cycle_adjacency(int n) {
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    a[static_cast<std::size_t>(i) * n + j] = 1.0;
    a[static_cast<std::size_t>(j) * n + i] = 1.0;
  }
  return SymmetricMatrix(n, std::move(a));
}

double ortho_residual(const EigenDecomposition& d) {
  const int n = d.order();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += d.vec(k, i) * d.vec(k, j);
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

double eigen_residual(const SymmetricMatrix& a, const EigenDecomposition& d) {
  const int n = a.order();
  double sq = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double av = 0.0;
      for (int k = 0; k < n; ++k) av += a(i, k) * d.vec(k, j);
      const double diff = av - d.vec(i, j) * d.eigenvalues[j];
      sq += diff * diff;
    }
  return std::sqrt(sq);
}

}  // namespace

TEST_CASE("construction enforces symmetry") {
  CHECK_THROWS_AS(SymmetricMatrix(2, {0, 1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricMatrix(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricMatrix(2, {1, 2, 3}), std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(SymmetricMatrix(1, {nan}), std::invalid_argument);

  // Asymmetry within 1e-9 of scale is averaged away.
  SymmetricMatrix a(2, {1.0, 2.0, 2.0 + 1e-12, 1.0});
  CHECK(a(0, 1) == a(1, 0));
  // Beyond that it is rejected.
  CHECK_THROWS_AS(SymmetricMatrix(2, {1.0, 2.0, 2.1, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("frobenius inner product") {
  const auto i2 = SymmetricMatrix::identity(2);
  CHECK(frobenius_inner(i2, i2) == 2.0);

  const SymmetricMatrix x(2, {0.5, -0.5, -0.5, 0.5});
  const double h = std::sqrt(2.0) / 2.0;
  const SymmetricMatrix y(2, {0.0, h, h, 0.0});
  CHECK(std::abs(frobenius_inner(x, y) - (-h)) <= 1e-15);

  Rng rng(7);
  const auto a = random_symmetric(rng, 4);
  CHECK(frobenius_inner(a, SymmetricMatrix::zero(4)) == 0.0);
  CHECK_THROWS_AS(frobenius_inner(a, i2), std::invalid_argument);
}

TEST_CASE("angle basics") {
  Rng rng(11);
  const auto a = random_symmetric(rng, 5);
  CHECK(angle(a, a) <= 1e-7);  // arccos near 1 loses half the digits

  const SymmetricMatrix x(2, {0.5, -0.5, -0.5, 0.5});
  const double h = std::sqrt(2.0) / 2.0;
  const SymmetricMatrix y(2, {0.0, h, h, 0.0});
  CHECK(std::abs(angle(x, y) - 0.75 * kPi) <= 1e-14);

  const auto i3 = SymmetricMatrix::identity(3);
  CHECK(std::abs(angle(i3, -i3) - kPi) <= 1e-14);
  CHECK_THROWS_AS(angle(i3, SymmetricMatrix::zero(3)), std::invalid_argument);
}

TEST_CASE("eigh on a diagonal matrix") {
  const auto d = eigh(SymmetricMatrix::diagonal({3.0, 1.0, -2.0}));
  REQUIRE(d.order() == 3);
  CHECK(d.eigenvalues[0] == 3.0);
  CHECK(d.eigenvalues[1] == 1.0);
  CHECK(d.eigenvalues[2] == -2.0);
  // Axis vectors up to sign.
  CHECK(std::abs(std::abs(d.vec(0, 0)) - 1.0) <= 1e-14);
  CHECK(std::abs(std::abs(d.vec(1, 1)) - 1.0) <= 1e-14);
  CHECK(std::abs(std::abs(d.vec(2, 2)) - 1.0) <= 1e-14);
  CHECK_THROWS_AS(eigh(SymmetricMatrix::identity(2), 0.0),
                  std::invalid_argument);
}

TEST_CASE("eigh pentagon spectrum") {
  const auto d = eigh(cycle_adjacency(5));
  const double golden_pos = (-1.0 + std::sqrt(5.0)) / 2.0;  // 2 cos(2 pi/5)
  const double golden_neg = (-1.0 - std::sqrt(5.0)) / 2.0;  // -2 cos(pi/5)
  CHECK(std::abs(d.eigenvalues[0] - 2.0) <= 1e-10);
  CHECK(std::abs(d.eigenvalues[1] - golden_pos) <= 1e-10);
  CHECK(std::abs(d.eigenvalues[2] - golden_pos) <= 1e-10);
  CHECK(std::abs(d.eigenvalues[3] - golden_neg) <= 1e-10);
  CHECK(std::abs(d.eigenvalues[4] - golden_neg) <= 1e-10);
}

TEST_CASE("eigh petersen spectrum") {
  // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint.
  std::vector<std::pair<int, int>> subsets;
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y) subsets.emplace_back(x, y);
  std::vector<double> a(100, 0.0);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const auto& [p, q] = subsets[i];
      const auto& [r, s] = subsets[j];
      if (i != j && p != r && p != s && q != r && q != s) a[i * 10 + j] = 1.0;
    }
  const auto d = eigh(SymmetricMatrix(10, std::move(a)));
  const std::vector<double> expected = {3, 1, 1, 1, 1, 1, -2, -2, -2, -2};
  for (int i = 0; i < 10; ++i)
    CHECK(std::abs(d.eigenvalues[i] - expected[i]) <= 1e-10);
}

TEST_CASE("eigh is deterministic") {
  Rng rng(3);
  const auto a = random_symmetric(rng, 8);
  const auto d1 = eigh(a);
  const auto d2 = eigh(a);
  CHECK(d1.eigenvalues == d2.eigenvalues);
  CHECK(d1.vectors == d2.vectors);
}

TEST_CASE("eigh invariants on random matrices") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform_int(1, 12);
    const auto a = random_symmetric(rng, n, -2.0, 2.0);
    const auto d = eigh(a);
    const double scale = std::max(1.0, a.frobenius_norm());
    CHECK(ortho_residual(d) <= 1e-10);
    CHECK(eigen_residual(a, d) <= 1e-10 * scale);
    CHECK(std::is_sorted(d.eigenvalues.rbegin(), d.eigenvalues.rend()));
    double sum = 0.0;
    for (double v : d.eigenvalues) sum += v;
    CHECK(std::abs(sum - a.trace()) <=
          1e-10 * std::max(1.0, std::abs(a.trace())));
  }
}

TEST_CASE("eigh matches closed forms on 3x3 families") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    // Symmetric circulant with first row (a, b, b).
    const double a = rng.uniform(-3.0, 3.0);
    const double b = rng.uniform(-3.0, 3.0);
    const SymmetricMatrix c(3, {a, b, b, b, a, b, b, b, a});
    std::vector<double> expect = {a + 2 * b, a - b, a - b};
    std::sort(expect.rbegin(), expect.rend());
    const auto d = eigh(c);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(d.eigenvalues[i] - expect[i]) <= 1e-10);

    // Rank-1 update of the identity: I + s u u^T.
    const double s = rng.uniform(-2.0, 2.0);
    std::vector<double> u = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                             rng.uniform(-1.0, 1.0)};
    std::vector<double> m(9, 0.0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m[i * 3 + j] = (i == j ? 1.0 : 0.0) + s * u[i] * u[j];
    const double usq = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    std::vector<double> expect2 = {1.0 + s * usq, 1.0, 1.0};
    std::sort(expect2.rbegin(), expect2.rend());
    const auto d2 = eigh(SymmetricMatrix(3, std::move(m)));
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(d2.eigenvalues[i] - expect2[i]) <= 1e-10);
  }
}

TEST_CASE("spectral split examples") {
  const auto i3 = SymmetricMatrix::identity(3);
  const auto [q1, p1] = spectral_split(i3);
  CHECK(max_abs_diff(q1, i3) <= 1e-12);
  CHECK(p1.max_abs() <= 1e-12);

  const auto [q2, p2] = spectral_split(SymmetricMatrix::diagonal({1.0, -2.0}));
  CHECK(max_abs_diff(q2, SymmetricMatrix::diagonal({1.0, 0.0})) <= 1e-12);
  CHECK(max_abs_diff(p2, SymmetricMatrix::diagonal({0.0, 2.0})) <= 1e-12);
}

TEST_CASE("pentagon negative definite part has the cosine pattern") {
  const auto [q, p] = spectral_split(cycle_adjacency(5));
  const double scale = p(0, 0);
  REQUIRE(scale > 0.0);
  const double adj = -std::cos(kPi / 5.0);       // adjacent pairs
  const double non = std::cos(2.0 * kPi / 5.0);  // non-adjacent pairs
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const int dist = std::min((i - j + 5) % 5, (j - i + 5) % 5);
      const double expect = dist == 0 ? 1.0 : (dist == 1 ? adj : non);
      CHECK(std::abs(p(i, j) / scale - expect) <= 1e-9);
    }
}

TEST_CASE("split invariants on random matrices") {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform_int(1, 12);
    const auto a = random_symmetric(rng, n, -2.0, 2.0);
    const double scale = std::max(1.0, a.frobenius_norm());

    const auto [q, p] = spectral_split(a);
    CHECK((a - (q - p)).frobenius_norm() <= 1e-10 * scale);
    const double qp = frobenius_inner(q, p);
    CHECK(std::abs(qp) <=
          1e-9 * std::max(1e-30, q.frobenius_norm() * p.frobenius_norm()));
    // Both parts stay PSD up to the zero band.
    const auto dq = eigh(q);
    const auto dp = eigh(p);
    CHECK(dq.eigenvalues.back() >= -dq.zero_threshold);
    CHECK(dp.eigenvalues.back() >= -dp.zero_threshold);

    const auto [m, neg] = entrywise_split(a);
    bool exact = true, disjoint = true, signs = true;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
      exact = exact && a.data()[i] == m.data()[i] - neg.data()[i];
      disjoint = disjoint && m.data()[i] * neg.data()[i] == 0.0;
      signs = signs && m.data()[i] >= 0.0 && neg.data()[i] >= 0.0;
    }
    CHECK(exact);
    CHECK(disjoint);
    CHECK(signs);
    CHECK(frobenius_inner(m, neg) == 0.0);
  }
}

TEST_CASE("entrywise split examples") {
  Rng rng(4);
  const auto nn = random_nonneg(rng, 4);
  CHECK(entrywise_split(nn).second.max_abs() == 0.0);

  // u = (v, -w) with v = (1,2), w = (3): N carries the cross blocks.
  const std::vector<double> u = {1.0, 2.0, -3.0};
  std::vector<double> outer(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) outer[i * 3 + j] = u[i] * u[j];
  const auto [m, n] = entrywise_split(SymmetricMatrix(3, std::move(outer)));
  const SymmetricMatrix expect_n(3, {0, 0, 3, 0, 0, 6, 3, 6, 0});
  CHECK(max_abs_diff(n, expect_n) == 0.0);

  const auto [m2, n2] =
      entrywise_split(SymmetricMatrix(2, {0.0, -1.0, -1.0, 0.0}));
  CHECK(m2.max_abs() == 0.0);
  CHECK(max_abs_diff(n2, SymmetricMatrix(2, {0.0, 1.0, 1.0, 0.0})) == 0.0);
}

TEST_CASE("padding leaves angles unchanged") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform_int(2, 8);
    const auto a = random_symmetric(rng, n);
    const auto b = random_symmetric(rng, n);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(std::abs(angle(a, b) - angle(a.padded(1), b.padded(1))) <= 1e-12);
  }
}

TEST_CASE("matrix text format round trips exactly") {
  Rng rng(8);
  const auto a = random_symmetric(rng, 6, -1e3, 1e3);
  std::stringstream ss;
  write_matrix(ss, a);
  const auto back = read_matrix(ss);
  CHECK(back.order() == a.order());
  CHECK(back.data() == a.data());  // 17 digits: bit-identical
}

TEST_CASE("matrix parser accepts scientific notation and rejects garbage") {
  std::stringstream ok("2\n1.5e0 -2E-1\n-0.2e+0 3\n");
  const auto m = read_matrix(ok);
  CHECK(m(0, 0) == 1.5);
  CHECK(m(0, 1) == -0.2);
  CHECK(m(1, 1) == 3.0);

  std::stringstream bad1("x");
  CHECK_THROWS_AS(read_matrix(bad1), std::invalid_argument);
  std::stringstream bad2("2\n1 2 3\n");
  CHECK_THROWS_AS(read_matrix(bad2), std::invalid_argument);
  std::stringstream bad3("-1\n");
  CHECK_THROWS_AS(read_matrix(bad3), std::invalid_argument);
}
