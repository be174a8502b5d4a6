#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "coneangle/cones.hpp"
#include "coneangle/gq.hpp"

using namespace coneangle;

namespace {

// Reduced fraction equality for the exact angle identity.
void check_fraction(long long num, long long den, long long enum_,
                    long long eden) {
  const long long g1 = std::gcd(num, den);
  const long long g2 = std::gcd(enum_, eden);
  CHECK(num / g1 == enum_ / g2);
  CHECK(den / g1 == eden / g2);
}

}  // namespace

TEST_CASE("field creation") {
  const auto f5 = GaloisField::create(5);
  CHECK(f5.p() == 5);
  CHECK(f5.e() == 1);
  CHECK(f5.q() == 5);
  CHECK(f5.add(2, 4) == 1);

  const auto f4 = GaloisField::create(4);
  CHECK(f4.p() == 2);
  CHECK(f4.e() == 2);
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});  // t^2 + t + 1
  // t * t = t + 1 in the polynomial encoding.
  const int t = f4.element({0, 1});
  CHECK(f4.mul(t, t) == f4.element({1, 1}));

  const auto f9 = GaloisField::create(9);
  CHECK(f9.p() == 3);
  CHECK(f9.e() == 2);
  CHECK(f9.modulus() == std::vector<int>{1, 0, 1});  // t^2 + 1

  CHECK_THROWS_AS(GaloisField::create(6), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField::create(1), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField::create(0), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField::create(12), std::invalid_argument);
}

TEST_CASE("field laws hold exhaustively for small q") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto f = GaloisField::create(q);
    for (int x = 0; x < q; ++x) {
      CHECK(f.add(x, 0) == x);
      CHECK(f.mul(x, 1) == x);
      CHECK(f.mul(x, 0) == 0);
      CHECK(f.add(x, f.neg(x)) == 0);
      if (x != 0) CHECK(f.mul(x, f.inv(x)) == 1);
      for (int y = 0; y < q; ++y) {
        CHECK(f.add(x, y) == f.add(y, x));
        CHECK(f.mul(x, y) == f.mul(y, x));
        CHECK(f.sub(x, y) == f.add(x, f.neg(y)));
        for (int z = 0; z < q; ++z) {
          CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
          CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        }
      }
    }
    CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
  }
}

TEST_CASE("field element encoding round trips") {
  const auto f8 = GaloisField::create(8);
  for (int x = 0; x < 8; ++x) CHECK(f8.element(f8.coeffs(x)) == x);
  CHECK_THROWS_AS(f8.element({2, 0, 0}), std::invalid_argument);
}

TEST_CASE("symplectic quadrangle of order (q,q)") {
  const auto w2 = build_gq_symplectic(2);
  CHECK(w2.s == 2);
  CHECK(w2.t == 2);
  CHECK(w2.points.size() == 15);
  CHECK(w2.lines.size() == 15);
  const auto p2 = verify_srg(w2.adjacency);
  CHECK(p2.n == 15);
  CHECK(p2.k == 6);
  CHECK(p2.a == 1);
  CHECK(p2.c == 3);
  const auto a2 = srg_angle(p2);
  CHECK(a2.exact);
  check_fraction(a2.cos2_num, a2.cos2_den, 1, 2);

  const auto w3 = build_gq_symplectic(3);
  CHECK(w3.points.size() == 40);
  const auto p3 = verify_srg(w3.adjacency);
  CHECK(p3.n == 40);
  CHECK(p3.k == 12);
  CHECK(p3.a == 2);
  CHECK(p3.c == 4);
  check_fraction(srg_angle(p3).cos2_num, srg_angle(p3).cos2_den, 1, 2);
}

TEST_CASE("elliptic quadrangle of order (q,q^2)") {
  const auto e2 = build_gq_elliptic(2);
  CHECK(e2.s == 2);
  CHECK(e2.t == 4);
  CHECK(e2.points.size() == 27);
  CHECK(e2.lines.size() == 45);
  const auto p2 = verify_srg(e2.adjacency);
  CHECK(p2.n == 27);
  CHECK(p2.k == 10);
  CHECK(p2.a == 1);
  CHECK(p2.c == 5);
  const auto a2 = srg_angle(p2);
  CHECK(std::abs(a2.cosine - (-std::sqrt(5.0) / 3.0)) <= 1e-12);
  check_fraction(a2.cos2_num, a2.cos2_den, 5, 9);

  const auto e3 = build_gq_elliptic(3);
  CHECK(e3.points.size() == 112);
  const auto p3 = verify_srg(e3.adjacency);
  CHECK(p3.n == 112);
  CHECK(p3.k == 30);
  CHECK(p3.a == 2);
  CHECK(p3.c == 10);
  const auto s3 = srg_spectrum(p3);
  CHECK(s3.theta == 2.0);
  CHECK(s3.m_theta == 90);
  CHECK(s3.tau == -10.0);
  CHECK(s3.m_tau == 21);
  CHECK(std::abs(srg_angle(p3).cosine - (-std::sqrt(10.0) / 4.0)) <= 1e-12);
}

TEST_CASE("point counts and certified parameters for q up to 5") {
  for (int q : {2, 3, 4, 5}) {
    const auto eq = build_gq_elliptic(q);
    const long long expected =
        static_cast<long long>(q + 1) *
        (static_cast<long long>(q) * q * q + 1);
    CHECK(static_cast<long long>(eq.points.size()) == expected);
    const auto params = verify_srg(eq.adjacency);
    CHECK(params.n == expected);
    CHECK(params.k == static_cast<long long>(q) * (q * q + 1));
    CHECK(params.a == q - 1);
    CHECK(params.c == static_cast<long long>(q) * q + 1);
    // m_tau tau^2 / (n k) = (q^2+1)/(q+1)^2 in exact arithmetic.
    const auto ang = srg_angle(params);
    REQUIRE(ang.exact);
    check_fraction(ang.cos2_num, ang.cos2_den,
                   static_cast<long long>(q) * q + 1,
                   static_cast<long long>(q + 1) * (q + 1));
  }
}

TEST_CASE("eigensolver reproduces the q = 4 spectrum at order 325") {
  const auto gq = build_gq_elliptic(4);
  const auto params = verify_srg(gq.adjacency);
  const auto spec = srg_spectrum(params);
  const auto a = gq.adjacency.adjacency_matrix();
  const auto d = eigh(a);

  long long nk = 0, nth = 0, ntau = 0;
  for (double lam : d.eigenvalues) {
    nk += std::abs(lam - static_cast<double>(spec.k)) <= 1e-6;
    nth += std::abs(lam - spec.theta) <= 1e-6;
    ntau += std::abs(lam - spec.tau) <= 1e-6;
  }
  CHECK(nk == 1);
  CHECK(nth == spec.m_theta);
  CHECK(ntau == spec.m_tau);

  double sq = 0.0;
  const int n = a.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double av = 0.0;
      for (int k = 0; k < n; ++k) av += a(i, k) * d.vec(k, j);
      const double diff = av - d.vec(i, j) * d.eigenvalues[j];
      sq += diff * diff;
    }
  CHECK(std::sqrt(sq) <= 1e-10 * std::max(1.0, a.frobenius_norm()));
}

TEST_CASE("quadrangle axioms hold for q in {2,3}") {
  for (int q : {2, 3}) {
    CHECK(gq_axiom_check(build_gq_symplectic(q)).ok);
    CHECK(gq_axiom_check(build_gq_elliptic(q)).ok);
  }
}

TEST_CASE("mutilated structures fail the axiom check") {
  auto gq = build_gq_elliptic(2);
  gq.lines.pop_back();
  const auto rep = gq_axiom_check(gq);
  CHECK_FALSE(rep.ok);
  // Regularity is checked first: some point is now on too few lines.
  CHECK(rep.detail.find("lies on") != std::string::npos);
}

TEST_CASE("line-based and form-based adjacency coincide") {
  for (int q : {2, 3}) {
    const auto w = build_gq_symplectic(q);
    CHECK(collinearity_graph(w) == w.adjacency);
    const auto e = build_gq_elliptic(q);
    CHECK(collinearity_graph(e) == e.adjacency);
  }
  auto broken = build_gq_elliptic(2);
  broken.lines.pop_back();
  CHECK_THROWS_AS(collinearity_graph(broken), std::logic_error);
}

TEST_CASE("collinearity graphs are k-regular with k = s(t+1)") {
  CHECK(verify_srg(build_gq_symplectic(2).adjacency).k == 6);
  CHECK(verify_srg(build_gq_elliptic(2).adjacency).k == 10);
  CHECK(verify_srg(build_gq_elliptic(3).adjacency).k == 30);
}

TEST_CASE("construction bounds") {
  CHECK_THROWS_AS(build_gq_elliptic(9), std::invalid_argument);
  CHECK_THROWS_AS(build_gq_symplectic(16), std::invalid_argument);
  CHECK_THROWS_AS(build_gq_elliptic(6), std::invalid_argument);
  CHECK_THROWS_AS(build_gq_elliptic(1), std::invalid_argument);
}

TEST_CASE("normalized points and structure report") {
  const auto gq = build_gq_symplectic(2);
  for (const auto& pt : gq.points) {
    int lead = -1;
    for (std::size_t i = 0; i < pt.coords.size() && lead < 0; ++i)
      if (pt.coords[i] != 0) lead = static_cast<int>(i);
    REQUIRE(lead >= 0);
    CHECK(pt.coords[lead] == 1);
  }
  std::stringstream ss;
  write_structure_report(ss, gq);
  CHECK(ss.str().find("order (s,t) = (2,2)") != std::string::npos);
  CHECK(ss.str().find("points: 15  lines: 15") != std::string::npos);
}
