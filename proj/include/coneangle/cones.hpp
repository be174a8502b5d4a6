#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coneangle/symmat.hpp"

namespace coneangle {

/// Maximal angle from a matrix to a cone. `witness` is the unique extremal
/// cone element, scaled to unit Frobenius norm (omitted by callers that
/// work from graph parameters alone).
struct AngleResult {
  double cosine = 0.0;
  double angle = 0.0;  // radians, arccos(cosine)
  std::optional<SymmetricMatrix> witness;
};

/// Maximal angle between A and the positive semidefinite cone,
/// cos = -sqrt(sum of squared negative eigenvalues / sum of all squared
/// eigenvalues); witness is the normalized negative definite part.
/// Rejects A inside the cone and A = 0.
AngleResult max_angle_psd(const SymmetricMatrix& a);

/// Maximal angle between A and the nonnegative cone,
/// cos = -sqrt(sum of squared negative entries / sum of all squared
/// entries); witness is the normalized negative part. Rejects A >= 0 and
/// A = 0.
AngleResult max_angle_nonneg(const SymmetricMatrix& a);

/// Maximal angle between the rank-1 matrix u u^T and the nonnegative cone,
/// computed in closed form from the positive/negative entries of u. Always
/// at most 3*pi/4, with equality iff the two sign classes have equal norm.
/// Rejects u without entries of both signs.
AngleResult rank1_angle(const std::vector<double>& u);

/// Trace of the alternating best-response iteration: from a nonnegative
/// start, alternate "negative definite part" and "negative part" responses.
/// Fixed points are critical pairs of the PSD/nonnegative cone pair.
struct CriticalPairTrace {
  std::vector<double> angles;  // one entry per response, non-decreasing
  SymmetricMatrix final_n;
  SymmetricMatrix final_p;
  bool converged = false;
  std::string stop_reason;  // "converged", "max_iter", or degeneracy note
};

CriticalPairTrace critical_pair_search(const SymmetricMatrix& n0,
                                       double tol = 1e-12,
                                       int max_iter = 10000);

/// Verdict of the trace-zero symmetric nonnegative inverse eigenvalue
/// conditions for orders 2..5. Realizable by a nonzero symmetric
/// nonnegative matrix with zero diagonal iff the list is non-increasing,
/// lambda_1 > 0, lambda_n >= -lambda_1, the sum is zero, and for n = 5
/// additionally lambda_2 + lambda_5 <= 0 and the sum of cubes is >= 0.
struct SniepVerdict {
  bool realizable = false;
  bool sorted_ok = false;
  bool positive_perron_ok = false;   // lambda_1 > 0
  bool spectral_radius_ok = false;   // lambda_n >= -lambda_1
  bool trace_zero_ok = false;        // sum lambda_i = 0
  bool pair_sum_ok = false;          // n = 5: lambda_2 + lambda_5 <= 0
  bool cube_sum_ok = false;          // n = 5: sum lambda_i^3 >= 0
  std::string failed;                // comma list of failed conditions
};

SniepVerdict sniep_realizable(const std::vector<double>& eigs);

/// Best known lower bound on the maximal angle between a PSD and a
/// nonnegative matrix of order n: exact 3*pi/4 for n <= 4, the pentagon
/// bound for n >= 5, and arccos(-sqrt(q^2+1)/(q+1)) whenever a prime power
/// q fits (q+1)(q^3+1) <= n. Non-decreasing in n.
struct GammaBound {
  int n = 0;
  double angle = 0.0;
  std::string source;  // "exact-n<=4" | "C5" | "GQ(q,q^2)"
  long long q = 0;     // prime power behind a quadrangle bound, else 0
};

GammaBound gamma_lower_bound(int n);

}  // namespace coneangle
