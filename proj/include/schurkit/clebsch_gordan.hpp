#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <functional>
#include <iostream>
#include <map>
#include <utility>
#include <vector>

#include "schurkit/gz_pattern.hpp"
#include "schurkit/parallel.hpp"
#include "schurkit/wigner.hpp"

namespace schurkit {

/// Input label of the U_d CG transform: |lambda, q> |i>, lambda = q.lambda().
struct CgInput {
  GzPattern q;
  int i = 1;

  auto operator<=>(const CgInput&) const = default;
  bool operator==(const CgInput&) const = default;
};

/// Output label: the retained input irrep lambda, the added row j, and a
/// GZ pattern of lambda + e_j.
struct CgOutput {
  Partition lambda;
  int j = 1;
  GzPattern q;

  auto operator<=>(const CgOutput&) const = default;
  bool operator==(const CgOutput&) const = default;
};

using CgInputState = std::map<CgInput, Complex>;
using CgOutputState = std::map<CgOutput, Complex>;

/// One nonzero entry of a CG column: amplitude on (j, q_out).
struct CgTerm {
  int j = 1;
  GzPattern q;
  double amplitude = 0.0;
};

/// One nonzero entry of a CG row: amplitude on the input (q_in, i).
struct CgSource {
  GzPattern q;
  int i = 1;
  double amplitude = 0.0;
};

/// Called with (mu, mu'') each time the reduced Wigner operator of the top
/// recursion level is applied.
using ControlPairVisitor = std::function<void(const Partition&, const Partition&)>;

/// U_CG^{[d]} |q>|i> as a sparse column, by recursion on d: the U_{d-1}
/// transform on (q_{(d-2)}, i) for i < d, relabelling i = d as j' = 0, then
/// the reduced Wigner rotation j' -> j controlled by (lambda, mu'').
inline std::vector<CgTerm> cg_column(const GzPattern& q, int i,
                                     const ControlPairVisitor* visit = nullptr) {
  const int d = q.d();
  if (i < 1 || i > d) throw ArgumentError("cg_column: i out of range [1, d]");
  const Partition& lambda = q.lambda();
  if (d == 1) {
    return {CgTerm{1, GzPattern({Partition{lambda[0] + 1}}, GzPattern::Unchecked{}), 1.0}};
  }

  const Partition& mu_prime = q.chain()[1];
  std::vector<CgTerm> inner;
  if (i < d) {
    inner = cg_column(q.tail(), i);
  } else {
    inner.push_back(CgTerm{0, q.tail(), 1.0});
  }

  std::vector<CgTerm> out;
  for (const auto& term : inner) {
    const Partition& mu_dprime = term.q.lambda();
    if (visit) (*visit)(lambda, mu_dprime);
    for (int j = 1; j <= d; ++j) {
      auto raised = add_box(lambda, j, d);
      if (!raised || !interlaces(mu_dprime, *raised, d)) continue;
      const double c = reduced_wigner({lambda, j, mu_prime, term.j, d});
      if (c == 0.0) continue;
      out.push_back(CgTerm{j, term.q.with_top(std::move(*raised)), term.amplitude * c});
    }
  }
  return out;
}

/// Row (j, q_out) of U_CG^{[d]} for input irrep lambda; since the transform
/// is real orthogonal this is also the adjoint applied to that output.
inline std::vector<CgSource> cg_row(const Partition& lambda, int j, const GzPattern& q_out) {
  const int d = q_out.d();
  if (j < 1 || j > d) throw ArgumentError("cg_row: j out of range [1, d]");
  auto raised = add_box(lambda, j, d);
  if (!raised || *raised != q_out.lambda()) {
    throw ArgumentError("cg_row: output pattern is not a pattern of lambda + e_j");
  }
  if (d == 1) return {CgSource{GzPattern({lambda}, GzPattern::Unchecked{}), 1, 1.0}};

  const Partition& mu_dprime = q_out.chain()[1];
  const GzPattern sub_out = q_out.tail();
  std::vector<CgSource> out;
  for (int jp = 0; jp < d; ++jp) {
    auto mu_prime = jp == 0 ? std::optional<Partition>(mu_dprime) : remove_box(mu_dprime, jp);
    if (!mu_prime || !interlaces(*mu_prime, lambda, d)) continue;
    const double c = reduced_wigner({lambda, j, *mu_prime, jp, d});
    if (c == 0.0) continue;
    if (jp == 0) {
      out.push_back(CgSource{sub_out.with_top(lambda), d, c});
    } else {
      for (auto& src : cg_row(*mu_prime, jp, sub_out)) {
        out.push_back(CgSource{src.q.with_top(lambda), src.i, c * src.amplitude});
      }
    }
  }
  return out;
}

/// Memo of cg_column results. Not synchronised: use one per thread.
class CgColumnCache {
 public:
  const std::vector<CgTerm>& column(const GzPattern& q, int i) {
    auto key = std::make_pair(q, i);
    auto it = columns_.find(key);
    if (it == columns_.end()) it = columns_.emplace(std::move(key), cg_column(q, i)).first;
    return it->second;
  }

  const std::vector<CgSource>& row(const Partition& lambda, int j, const GzPattern& q_out) {
    auto key = std::make_tuple(lambda, j, q_out);
    auto it = rows_.find(key);
    if (it == rows_.end()) it = rows_.emplace(std::move(key), cg_row(lambda, j, q_out)).first;
    return it->second;
  }

 private:
  std::map<std::pair<GzPattern, int>, std::vector<CgTerm>> columns_;
  std::map<std::tuple<Partition, int, GzPattern>, std::vector<CgSource>> rows_;
};

/// Dense U_CG^{lambda,(1)} with explicit index maps.
struct CgBlock {
  Partition lambda;
  int d = 1;
  CMatrix matrix;
  std::vector<CgInput> cols;   // (q, i), q in GZ order, i fastest
  std::vector<CgOutput> rows;  // j ascending, then GZ order of lambda + e_j

  std::size_t col_of(const CgInput& in) const {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] == in) return c;
    }
    throw ArgumentError("CgBlock: unknown input label");
  }

  std::size_t row_of(const CgOutput& out) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r] == out) return r;
    }
    throw ArgumentError("CgBlock: unknown output label");
  }
};

/// Builds the dense block column by column from the sparse recursion.
inline CgBlock cg_block(const Partition& lambda, int d, int threads = 1) {
  if (d < 1) throw ArgumentError("cg_block: d must be positive");
  if (lambda.length() > static_cast<std::size_t>(d)) {
    throw ArgumentError("cg_block: lambda has more than d parts");
  }
  CgBlock block;
  block.lambda = lambda;
  block.d = d;

  const auto patterns = enumerate_gz(lambda, d);
  for (const auto& q : patterns) {
    for (int i = 1; i <= d; ++i) block.cols.push_back(CgInput{q, i});
  }

  std::map<std::pair<int, GzPattern>, std::size_t> row_index;
  for (int j = 1; j <= d; ++j) {
    auto raised = add_box(lambda, j, d);
    if (!raised) continue;
    for (auto& q : enumerate_gz(*raised, d)) {
      row_index.emplace(std::make_pair(j, q), block.rows.size());
      block.rows.push_back(CgOutput{lambda, j, std::move(q)});
    }
  }
  if (block.rows.size() != block.cols.size()) {
    throw ConsistencyError("cg_block: Pieri dimension count failed for (" + lambda.to_string() +
                           ")");
  }

  block.matrix = CMatrix::Zero(static_cast<Eigen::Index>(block.rows.size()),
                               static_cast<Eigen::Index>(block.cols.size()));
  parallel_for(block.cols.size(), threads, [&](std::size_t c) {
    for (const auto& term : cg_column(block.cols[c].q, block.cols[c].i)) {
      const auto r = row_index.at(std::make_pair(term.j, term.q));
      block.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = term.amplitude;
    }
  });
  return block;
}

/// Applies the lambda-controlled CG transform to a labelled state. The
/// lambda label is retained in the output.
inline CgOutputState cg_apply(const CgInputState& state, int d) {
  double norm2 = 0.0;
  for (const auto& [label, amplitude] : state) {
    if (label.q.d() != d) throw ArgumentError("cg_apply: label built for a different d");
    if (label.i < 1 || label.i > d) throw ArgumentError("cg_apply: i out of range [1, d]");
    norm2 += std::norm(amplitude);
  }
  if (norm2 > 0.0 && std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
    std::clog << "schurkit: warning: cg_apply input norm " << std::sqrt(norm2) << '\n';
  }

  CgOutputState out;
  for (const auto& [label, amplitude] : state) {
    for (const auto& term : cg_column(label.q, label.i)) {
      out[CgOutput{label.q.lambda(), term.j, term.q}] += amplitude * term.amplitude;
    }
  }
  return out;
}

}  // namespace schurkit
