#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "schurkit/partition.hpp"

namespace schurkit {

/// Reduced Wigner coefficient for U_d : U_{d-1} with the defining irrep.
/// mu gains a box in row j (U_d level); mu_prime gains a box in row j_prime
/// (U_{d-1} level), with j_prime = 0 meaning the U_{d-1} label is unchanged.
struct ReducedWignerQuery {
  Partition mu;
  int j = 1;
  Partition mu_prime;
  int j_prime = 0;
  int d = 1;
};

namespace detail {

/// Accumulates a product of integer factors as magnitude and sign, keeping
/// zero detection and sign exact.
struct SignedProduct {
  double magnitude = 1.0;
  int sign = 1;

  void times(long long factor) {
    if (factor == 0) {
      sign = 0;
      return;
    }
    if (factor < 0) {
      sign = -sign;
      factor = -factor;
    }
    magnitude *= static_cast<double>(factor);
  }
};

}  // namespace detail

/// Closed-form coefficient; exactly 0 for couplings that are not allowed.
inline double reduced_wigner(const ReducedWignerQuery& q) {
  const int d = q.d;
  if (d < 1) throw ArgumentError("reduced_wigner: d must be positive");
  if (q.j < 1 || q.j > d) throw ArgumentError("reduced_wigner: j out of range [1, d]");
  if (q.j_prime < 0 || q.j_prime > d - 1) {
    throw ArgumentError("reduced_wigner: j' out of range [0, d-1]");
  }
  if (q.mu.length() > static_cast<std::size_t>(d)) return 0.0;
  if (q.mu_prime.length() > static_cast<std::size_t>(d - 1)) return 0.0;

  const auto raised = add_box(q.mu, q.j, d);
  if (!raised) return 0.0;
  if (!interlaces(q.mu_prime, q.mu, d)) return 0.0;
  std::optional<Partition> raised_prime =
      q.j_prime == 0 ? std::optional<Partition>(q.mu_prime) : add_box(q.mu_prime, q.j_prime, d - 1);
  if (!raised_prime) return 0.0;
  if (!interlaces(*raised_prime, *raised, d)) return 0.0;

  // Shifted weights: mu~_k = mu_k + d - k, mu~'_k = mu'_k + d - 1 - k (1-based k).
  auto shifted = [&](int k) -> long long { return q.mu[k - 1] + d - k; };
  auto shifted_prime = [&](int k) -> long long { return q.mu_prime[k - 1] + d - 1 - k; };

  const int j = q.j;
  const int jp = q.j_prime;
  detail::SignedProduct numerator;
  detail::SignedProduct denominator;
  for (int s = 1; s <= d; ++s) {
    if (s != j) denominator.times(shifted(j) - shifted(s));
  }
  if (jp == 0) {
    for (int s = 1; s <= d - 1; ++s) numerator.times(shifted(j) - shifted_prime(s));
  } else {
    for (int s = 1; s <= d - 1; ++s) {
      if (s != jp) numerator.times(shifted(j) - shifted_prime(s));
    }
    for (int t = 1; t <= d; ++t) {
      if (t != j) numerator.times(shifted_prime(jp) - shifted(t) + 1);
    }
    for (int t = 1; t <= d - 1; ++t) {
      if (t != jp) denominator.times(shifted_prime(jp) - shifted_prime(t) + 1);
    }
  }

  if (denominator.sign == 0) {
    throw ConsistencyError("reduced_wigner: vanishing denominator for an allowed coupling");
  }
  if (numerator.sign == 0) return 0.0;
  if (numerator.sign != denominator.sign) {
    throw ConsistencyError("reduced_wigner: negative radicand for an allowed coupling");
  }
  const double magnitude = std::sqrt(numerator.magnitude / denominator.magnitude);
  const bool negative = jp != 0 && j > jp;
  return negative ? -magnitude : magnitude;
}

/// The d x d operator controlled by (mu, mu''): rows j in [d], columns
/// j' in {0, ..., d-1}, entry (j-1, j') = reduced_wigner(mu, j, mu'' - e_{j'}, j').
inline RMatrix reduced_wigner_matrix(const Partition& mu, const Partition& mu_dprime, int d) {
  if (d < 1) throw ArgumentError("reduced_wigner_matrix: d must be positive");
  if (mu_dprime.length() > static_cast<std::size_t>(d - 1)) {
    throw ArgumentError("reduced_wigner_matrix: mu'' has more than d-1 parts");
  }
  RMatrix out = RMatrix::Zero(d, d);
  for (int jp = 0; jp < d; ++jp) {
    const auto mu_prime = jp == 0 ? std::optional<Partition>(mu_dprime) : remove_box(mu_dprime, jp);
    if (!mu_prime) continue;
    for (int j = 1; j <= d; ++j) {
      out(j - 1, jp) = reduced_wigner({mu, j, *mu_prime, jp, d});
    }
  }
  return out;
}

}  // namespace schurkit
