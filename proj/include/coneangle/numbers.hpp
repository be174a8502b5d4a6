#pragma once

#include <cmath>

namespace coneangle {

/// True iff q = p^e for a prime p and e >= 1; reports p and e on request.
inline bool is_prime_power(long long q, long long* prime = nullptr,
                           int* exponent = nullptr) {
  if (q < 2) return false;
  long long p = 0;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself is prime
  long long m = q;
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return false;
  if (prime) *prime = p;
  if (exponent) *exponent = e;
  return true;
}

inline long long isqrt_floor(long long v) {
  if (v < 0) return -1;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline bool perfect_square(long long v, long long* root = nullptr) {
  if (v < 0) return false;
  const long long r = isqrt_floor(v);
  if (r * r != v) return false;
  if (root) *root = r;
  return true;
}

}  // namespace coneangle
