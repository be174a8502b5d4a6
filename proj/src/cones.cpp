#include "coneangle/cones.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coneangle/numbers.hpp"

namespace coneangle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

SymmetricMatrix normalized(const SymmetricMatrix& m) {
  return m * (1.0 / m.frobenius_norm());
}

}  // namespace

AngleResult max_angle_psd(const SymmetricMatrix& a) {
  if (a.is_zero()) throw std::invalid_argument("max_angle_psd: zero matrix");
  const EigenDecomposition dec = eigh(a);
  double neg_sq = 0.0, all_sq = 0.0;
  bool has_neg = false;
  for (double lam : dec.eigenvalues) {
    all_sq += lam * lam;
    if (lam < -dec.zero_threshold) {
      neg_sq += lam * lam;
      has_neg = true;
    }
  }
  if (!has_neg)
    throw std::invalid_argument(
        "max_angle_psd: matrix is positive semidefinite");
  AngleResult r;
  r.cosine = -std::sqrt(neg_sq / all_sq);
  r.angle = clamped_acos(r.cosine);
  r.witness = normalized(spectral_part(dec, -1));
  return r;
}

AngleResult max_angle_nonneg(const SymmetricMatrix& a) {
  if (a.is_zero()) throw std::invalid_argument("max_angle_nonneg: zero matrix");
  double neg_sq = 0.0, all_sq = 0.0;
  for (double v : a.data()) {
    all_sq += v * v;
    if (v < 0.0) neg_sq += v * v;
  }
  if (neg_sq == 0.0)
    throw std::invalid_argument("max_angle_nonneg: matrix is nonnegative");
  AngleResult r;
  r.cosine = -std::sqrt(neg_sq / all_sq);
  r.angle = clamped_acos(r.cosine);
  r.witness = normalized(entrywise_split(a).second);
  return r;
}

AngleResult rank1_angle(const std::vector<double>& u) {
  if (u.empty()) throw std::invalid_argument("rank1_angle: empty vector");
  double vsq = 0.0, wsq = 0.0;
  for (double x : u) {
    if (x > 0.0)
      vsq += x * x;
    else if (x < 0.0)
      wsq += x * x;
  }
  if (vsq == 0.0 || wsq == 0.0)
    throw std::invalid_argument(
        "rank1_angle: vector needs entries of both signs");
  const double vn = std::sqrt(vsq), wn = std::sqrt(wsq);
  AngleResult r;
  r.cosine = -std::sqrt(2.0) * vn * wn / (vsq + wsq);
  r.angle = clamped_acos(r.cosine);
  // Negative part of u u^T has norm sqrt(2) |v| |w|.
  const int n = static_cast<int>(u.size());
  const double scale = 1.0 / (std::sqrt(2.0) * vn * wn);
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double prod = u[i] * u[j];
      if (prod < 0.0) {
        w[static_cast<std::size_t>(i) * n + j] = -prod * scale;
        w[static_cast<std::size_t>(j) * n + i] = -prod * scale;
      }
    }
  r.witness = SymmetricMatrix(n, std::move(w));
  return r;
}

CriticalPairTrace critical_pair_search(const SymmetricMatrix& n0, double tol,
                                       int max_iter) {
  if (!(tol >= 0.0))
    throw std::invalid_argument("critical_pair_search: tol must be >= 0");
  if (max_iter < 1)
    throw std::invalid_argument("critical_pair_search: max_iter must be >= 1");
  if (n0.is_zero())
    throw std::invalid_argument("critical_pair_search: start is zero");
  if (n0.min_entry() < 0.0)
    throw std::invalid_argument(
        "critical_pair_search: start must be entrywise nonnegative");

  std::vector<double> angles;
  bool converged = false;
  std::string reason;
  SymmetricMatrix cur_n = normalized(n0);
  std::optional<SymmetricMatrix> cur_p;

  auto settled = [&](double ang) {
    const bool done = !angles.empty() && (ang - angles.back() < tol);
    angles.push_back(ang);
    return done;
  };

  for (int round = 0; round < max_iter; ++round) {
    AngleResult ap;
    try {
      ap = max_angle_psd(cur_n);
    } catch (const std::invalid_argument&) {
      if (round == 0)
        throw std::invalid_argument(
            "critical_pair_search: start is positive semidefinite");
      reason = "iterate entered the positive semidefinite cone";
      break;
    }
    cur_p = ap.witness;
    if (settled(ap.angle)) {
      converged = true;
      reason = "converged";
      break;
    }
    if (cur_p->min_entry() >= 0.0) {
      reason = "iterate entered the nonnegative cone";
      break;
    }
    const AngleResult an = max_angle_nonneg(*cur_p);
    cur_n = *an.witness;
    if (settled(an.angle)) {
      converged = true;
      reason = "converged";
      break;
    }
  }
  if (reason.empty()) reason = "max_iter";
  return CriticalPairTrace{std::move(angles), std::move(cur_n),
                           std::move(*cur_p), converged, std::move(reason)};
}

SniepVerdict sniep_realizable(const std::vector<double>& eigs) {
  const int n = static_cast<int>(eigs.size());
  if (n < 2 || n > 5)
    throw std::invalid_argument(
        "sniep_realizable: supported orders are 2..5 (the trace-zero "
        "problem is open for n >= 6)");
  double max_abs = 0.0, sum = 0.0, cubes = 0.0;
  for (double v : eigs) {
    max_abs = std::max(max_abs, std::abs(v));
    sum += v;
    cubes += v * v * v;
  }
  const double tol = 1e-9 * std::max(1.0, max_abs);
  const double tol3 = 1e-9 * std::pow(std::max(1.0, max_abs), 3);

  SniepVerdict v;
  v.sorted_ok = std::is_sorted(eigs.begin(), eigs.end(), std::greater<>());
  v.positive_perron_ok = eigs.front() > 0.0;
  v.spectral_radius_ok = eigs.back() + eigs.front() >= -tol;
  v.trace_zero_ok = std::abs(sum) <= tol;
  v.pair_sum_ok = n < 5 || eigs[1] + eigs[4] <= tol;
  v.cube_sum_ok = n < 5 || cubes >= -tol3;
  v.realizable = v.sorted_ok && v.positive_perron_ok && v.spectral_radius_ok &&
                 v.trace_zero_ok && v.pair_sum_ok && v.cube_sum_ok;

  std::string failed;
  auto note = [&](bool ok, const char* name) {
    if (ok) return;
    if (!failed.empty()) failed += ", ";
    failed += name;
  };
  note(v.sorted_ok, "not sorted non-increasing");
  note(v.positive_perron_ok, "lambda1 <= 0");
  note(v.spectral_radius_ok, "lambda_n < -lambda1");
  note(v.trace_zero_ok, "sum != 0");
  note(v.pair_sum_ok, "lambda2+lambda5 > 0");
  note(v.cube_sum_ok, "sum of cubes < 0");
  v.failed = std::move(failed);
  return v;
}

GammaBound gamma_lower_bound(int n) {
  if (n < 2) throw std::invalid_argument("gamma_lower_bound: n must be >= 2");
  GammaBound best;
  best.n = n;
  if (n <= 4) {
    best.angle = 0.75 * kPi;
    best.source = "exact-n<=4";
    return best;
  }
  // Pentagon bound, valid from n = 5 by zero padding.
  best.angle = clamped_acos(-(1.0 + 1.0 / std::sqrt(5.0)) / 2.0);
  best.source = "C5";
  for (long long q = 2; (q + 1) * (q * q * q + 1) <= n; ++q) {
    if (!is_prime_power(q)) continue;
    const double cosine =
        -std::sqrt(static_cast<double>(q * q + 1)) / static_cast<double>(q + 1);
    const double ang = clamped_acos(cosine);
    if (ang > best.angle) {
      best.angle = ang;
      best.source = "GQ(q,q^2)";
      best.q = q;
    }
  }
  return best;
}

}  // namespace coneangle
