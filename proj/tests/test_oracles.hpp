#pragma once

// Ground truth computed without the library's combinatorics or CG code.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "schurkit/common.hpp"
#include "schurkit/partition.hpp"

namespace oracle {

using schurkit::BigInt;
using schurkit::CMatrix;
using schurkit::Complex;

/// Every length-d vector of nonnegative integers summing to n.
inline std::vector<std::vector<int>> compositions(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == d - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  if (d >= 1) rec(0, n);
  return out;
}

inline std::vector<int> conjugate_shape(const std::vector<int>& rows) {
  std::vector<int> cols(rows.empty() ? 0 : static_cast<std::size_t>(rows.front()), 0);
  for (int r : rows) {
    for (int c = 0; c < r; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return cols;
}

/// n! / prod(hooks).
inline BigInt hook_length_count(const schurkit::Partition& lambda) {
  const auto& rows = lambda.parts();
  const auto cols = conjugate_shape(rows);
  BigInt num = 1, den = 1;
  int n = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < rows[r]; ++c) {
      ++n;
      num *= n;
      den *= (rows[r] - c - 1) + (cols[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1) + 1;
    }
  }
  return num / den;
}

/// Counts standard fillings by stripping the largest entry from every corner.
inline BigInt count_standard_tableaux(const schurkit::Partition& lambda) {
  std::function<BigInt(std::vector<int>&)> rec = [&](std::vector<int>& rows) -> BigInt {
    int total = 0;
    for (int r : rows) total += r;
    if (total <= 1) return 1;
    BigInt count = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int below = r + 1 < rows.size() ? rows[r + 1] : 0;
      if (rows[r] > below) {
        --rows[r];
        count += rec(rows);
        ++rows[r];
      }
    }
    return count;
  };
  auto rows = lambda.parts();
  return rec(rows);
}

/// Brute-force fill of every box with 1..d, keeping semistandard ones.
inline BigInt count_semistandard_tableaux(const schurkit::Partition& lambda, int d) {
  const auto& rows = lambda.parts();
  std::vector<std::pair<int, int>> boxes;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < rows[r]; ++c) boxes.emplace_back(static_cast<int>(r), c);
  }
  std::vector<std::vector<int>> t(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) t[r].assign(static_cast<std::size_t>(rows[r]), 0);
  BigInt count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == boxes.size()) {
      ++count;
      return;
    }
    const auto [r, c] = boxes[k];
    for (int v = 1; v <= d; ++v) {
      if (c > 0 && v < t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]) continue;
      if (r > 0 && v <= t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)]) continue;
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return count;
}

inline double binomial(int m, int k) {
  double b = 1.0;
  for (int t = 1; t <= k; ++t) b = b * (m - k + t) / t;
  return b;
}

inline Complex ipow(Complex z, int e) {
  Complex r{1.0};
  for (int k = 0; k < e; ++k) r *= z;
  return r;
}

/// U(2) irrep (a, b) = det^b (x) Sym^{a-b}, orthonormal monomial basis
/// indexed by k = number of e_2 factors.
inline CMatrix u2_irrep(int a, int b, const CMatrix& u) {
  const int m = a - b;
  CMatrix out = CMatrix::Zero(m + 1, m + 1);
  for (int k = 0; k <= m; ++k) {
    // (u00 e1 + u10 e2)^{m-k} (u01 e1 + u11 e2)^k, coefficient of e1^{m-k'} e2^{k'}
    for (int s = 0; s <= m - k; ++s) {
      for (int t = 0; t <= k; ++t) {
        const int kp = s + t;
        const Complex term = binomial(m - k, s) * binomial(k, t) *
                             ipow(u(0, 0), m - k - s) * ipow(u(1, 0), s) *
                             ipow(u(0, 1), k - t) * ipow(u(1, 1), t);
        out(kp, k) += term * std::sqrt(binomial(m, k) / binomial(m, kp));
      }
    }
  }
  return out * ipow(u.determinant(), b);
}

/// Null space of X -> X A_t - B_t X stacked over the samples.
inline CMatrix intertwiner_null_space(const std::vector<CMatrix>& a, const std::vector<CMatrix>& b,
                                      double tol = 1e-8) {
  const auto dim = a.front().rows();
  const auto unknowns = dim * dim;
  CMatrix system(static_cast<Eigen::Index>(a.size()) * unknowns, unknowns);
  const CMatrix id = CMatrix::Identity(dim, dim);
  for (std::size_t t = 0; t < a.size(); ++t) {
    // column-major vec: vec(X A) = (A^T kron I) vec X, vec(B X) = (I kron B) vec X
    CMatrix op(unknowns, unknowns);
    for (Eigen::Index p = 0; p < dim; ++p) {
      for (Eigen::Index q = 0; q < dim; ++q) {
        op.block(p * dim, q * dim, dim, dim) = a[t](q, p) * id;
      }
      op.block(p * dim, p * dim, dim, dim) -= b[t];
    }
    system.middleRows(static_cast<Eigen::Index>(t) * unknowns, unknowns) = op;
  }
  Eigen::JacobiSVD<CMatrix> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) rank += sv(k) > tol * sv(0);
  return svd.matrixV().rightCols(unknowns - rank);
}

}  // namespace oracle
