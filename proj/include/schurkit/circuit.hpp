#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schurkit/clebsch_gordan.hpp"

namespace schurkit {

/// Either a unitary acting on basis states (a, b), a < b, or a phase on a.
struct Gate {
  enum class Kind { Rotation, Phase };

  Kind kind = Kind::Rotation;
  std::size_t a = 0;
  std::size_t b = 0;
  Eigen::Matrix2cd block = Eigen::Matrix2cd::Identity();
  Complex value{1.0};

  static Gate rotation(std::size_t a, std::size_t b, const Eigen::Matrix2cd& block) {
    Gate g;
    g.kind = Kind::Rotation;
    g.a = a;
    g.b = b;
    g.block = block;
    return g;
  }

  static Gate phase(std::size_t a, Complex value) {
    Gate g;
    g.kind = Kind::Phase;
    g.a = a;
    g.value = value;
    return g;
  }

  /// M <- G M.
  void apply_left(CMatrix& m) const {
    const auto ia = static_cast<Eigen::Index>(a);
    if (kind == Kind::Phase) {
      m.row(ia) *= value;
      return;
    }
    const auto ib = static_cast<Eigen::Index>(b);
    const Eigen::RowVectorXcd ra = m.row(ia);
    const Eigen::RowVectorXcd rb = m.row(ib);
    m.row(ia) = block(0, 0) * ra + block(0, 1) * rb;
    m.row(ib) = block(1, 0) * ra + block(1, 1) * rb;
  }
};

struct GateList {
  std::size_t size = 0;
  std::vector<Gate> gates;

  std::size_t rotation_count() const {
    std::size_t count = 0;
    for (const auto& g : gates) count += g.kind == Gate::Kind::Rotation;
    return count;
  }

  std::size_t phase_count() const { return gates.size() - rotation_count(); }

  /// Starts from the identity and left-multiplies each gate in list order.
  CMatrix replay() const {
    CMatrix m = CMatrix::Identity(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
    for (const auto& g : gates) g.apply_left(m);
    return m;
  }
};

/// Givens sweep: zero column c below the diagonal from the bottom up with
/// rotations on rows (c, r), leaving a diagonal of phases. The list is the
/// phases followed by the inverse rotations in reverse order.
inline GateList two_level_decompose(const CMatrix& u, double tol = 1e-10) {
  if (u.rows() != u.cols()) throw ArgumentError("two_level_decompose: matrix must be square");
  const auto dim = u.rows();
  const double residual =
      dim == 0 ? 0.0 : (u.adjoint() * u - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (residual > tol) {
    throw ArgumentError("two_level_decompose: input is not unitary (residual " +
                        std::to_string(residual) + ")");
  }

  CMatrix v = u;
  std::vector<Gate> eliminations;
  for (Eigen::Index c = 0; c + 1 < dim; ++c) {
    for (Eigen::Index r = dim - 1; r > c; --r) {
      const Complex bottom = v(r, c);
      if (bottom == Complex{}) continue;
      const Complex top = v(c, c);
      const double norm = std::sqrt(std::norm(top) + std::norm(bottom));
      Eigen::Matrix2cd g;
      g << std::conj(top) / norm, std::conj(bottom) / norm, -bottom / norm, top / norm;
      auto gate = Gate::rotation(static_cast<std::size_t>(c), static_cast<std::size_t>(r), g);
      gate.apply_left(v);
      v(r, c) = 0.0;
      eliminations.push_back(std::move(gate));
    }
  }

  GateList out;
  out.size = static_cast<std::size_t>(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const Complex p = v(k, k);
    if (p != Complex{1.0}) out.gates.push_back(Gate::phase(static_cast<std::size_t>(k), p / std::abs(p)));
  }
  for (auto it = eliminations.rbegin(); it != eliminations.rend(); ++it) {
    out.gates.push_back(Gate::rotation(it->a, it->b, it->block.adjoint()));
  }
  return out;
}

/// One CG step of the cascade: input irreps of size k, output size k + 1.
struct CgStepCount {
  int step = 0;
  int wigner_dimension = 0;
  std::size_t control_pairs = 0;
};

struct GateCountReport {
  int n = 0;
  int d = 0;
  std::vector<CgStepCount> steps;

  std::size_t total_control_pairs() const {
    std::size_t total = 0;
    for (const auto& s : steps) total += s.control_pairs;
    return total;
  }
};

/// Distinct (mu, mu'') pairs controlling a reduced Wigner rotation, per
/// cascade step, collected while building the CG columns of every mu in
/// I_{d,k}.
inline std::set<std::pair<Partition, Partition>> control_pairs(int k, int d) {
  std::set<std::pair<Partition, Partition>> pairs;
  const ControlPairVisitor visit = [&](const Partition& mu, const Partition& mu_dprime) {
    pairs.emplace(mu, mu_dprime);
  };
  for (const auto& mu : enumerate_partitions(d, k)) {
    for (const auto& q : enumerate_gz(mu, d)) {
      for (int i = 1; i <= d; ++i) cg_column(q, i, &visit);
    }
  }
  return pairs;
}

inline GateCountReport gate_count_report(int n, int d) {
  if (n < 1 || d < 1) throw ArgumentError("gate_count_report needs n >= 1 and d >= 1");
  GateCountReport report;
  report.n = n;
  report.d = d;
  for (int k = 1; k < n; ++k) {
    report.steps.push_back(CgStepCount{k, d, control_pairs(k, d).size()});
  }
  return report;
}

/// Least-squares polynomial of degree <= max_degree; returns the relative
/// residual |y - fit| / |y|.
inline double polynomial_fit_residual(const std::vector<double>& x, const std::vector<double>& y,
                                      int max_degree) {
  if (x.size() != y.size() || x.empty()) throw ArgumentError("polynomial fit: mismatched samples");
  const auto rows = static_cast<Eigen::Index>(x.size());
  const auto cols = static_cast<Eigen::Index>(max_degree + 1);
  // Centre and scale x to keep the Vandermonde matrix well conditioned.
  double lo = x.front(), hi = x.front();
  for (double v : x) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double mid = 0.5 * (lo + hi);
  const double half = hi > lo ? 0.5 * (hi - lo) : 1.0;
  RMatrix a(rows, cols);
  Eigen::VectorXd b(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double t = (x[static_cast<std::size_t>(r)] - mid) / half;
    double power = 1.0;
    for (Eigen::Index c = 0; c < cols; ++c) {
      a(r, c) = power;
      power *= t;
    }
    b(r) = y[static_cast<std::size_t>(r)];
  }
  const Eigen::VectorXd coeffs = a.completeOrthogonalDecomposition().solve(b);
  return (a * coeffs - b).norm() / b.norm();
}

}  // namespace schurkit
