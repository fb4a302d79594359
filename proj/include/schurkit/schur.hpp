#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "schurkit/clebsch_gordan.hpp"
#include "schurkit/parallel.hpp"
#include "schurkit/registers.hpp"
#include "schurkit/yy_path.hpp"

namespace schurkit {

/// Row labelling of the Schur basis for (n, d): lambda blocks in canonical
/// order, inside a block GZ index major and path rank minor.
class SchurIndex {
 public:
  struct Block {
    Partition lambda;
    std::size_t offset = 0;
    std::size_t dim_q = 0;
    std::size_t dim_p = 0;
    std::vector<GzPattern> patterns;
    std::vector<YyPath> paths;
    std::map<GzPattern, std::size_t> pattern_index;
    std::map<std::vector<int>, std::size_t> path_index;

    std::size_t size() const { return dim_q * dim_p; }
  };

  SchurIndex() = default;

  SchurIndex(int n, int d) : n_(n), d_(d) {
    if (n < 1 || d < 1) throw ArgumentError("Schur index needs n >= 1 and d >= 1");
    std::size_t offset = 0;
    for (const auto& lambda : enumerate_partitions(d, n)) {
      Block b;
      b.lambda = lambda;
      b.offset = offset;
      b.patterns = enumerate_gz(lambda, d);
      b.paths = enumerate_paths(lambda);
      b.dim_q = b.patterns.size();
      b.dim_p = b.paths.size();
      for (std::size_t k = 0; k < b.patterns.size(); ++k) b.pattern_index.emplace(b.patterns[k], k);
      for (std::size_t k = 0; k < b.paths.size(); ++k) b.path_index.emplace(b.paths[k].record(), k);
      offset += b.size();
      block_of_.emplace(lambda, blocks_.size());
      blocks_.push_back(std::move(b));
    }
    dimension_ = offset;
  }

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  const Block& block(const Partition& lambda) const {
    auto it = block_of_.find(lambda);
    if (it == block_of_.end()) {
      throw ArgumentError("(" + lambda.to_string() + ") is not an irrep label for this (n, d)");
    }
    return blocks_[it->second];
  }

  std::size_t row_of(const GzPattern& q, const std::vector<int>& record) const {
    const auto& b = block(q.lambda());
    auto qi = b.pattern_index.find(q);
    auto pi = b.path_index.find(record);
    if (qi == b.pattern_index.end() || pi == b.path_index.end()) {
      throw ArgumentError("label does not belong to block (" + b.lambda.to_string() + ")");
    }
    return b.offset + qi->second * b.dim_p + pi->second;
  }

  std::size_t row_of(const SchurLabel& label) const {
    if (label.q.lambda() != label.lambda || label.p.lambda() != label.lambda) {
      throw ArgumentError("Schur label components disagree on lambda");
    }
    return row_of(label.q, label.p.record());
  }

  SchurLabel label(std::size_t row) const {
    for (const auto& b : blocks_) {
      if (row < b.offset + b.size()) {
        const auto local = row - b.offset;
        return SchurLabel{b.lambda, b.patterns[local / b.dim_p], b.paths[local % b.dim_p]};
      }
    }
    throw ArgumentError("Schur row index out of range");
  }

  /// Block containing a row.
  const Block& block_at(std::size_t row) const {
    for (const auto& b : blocks_) {
      if (row < b.offset + b.size()) return b;
    }
    throw ArgumentError("Schur row index out of range");
  }

 private:
  int n_ = 0;
  int d_ = 0;
  std::size_t dimension_ = 0;
  std::vector<Block> blocks_;
  std::map<Partition, std::size_t> block_of_;
};

struct SchurOptions {
  int threads = 1;
  std::size_t max_dimension = 4096;
};

/// Dense Schur transform: rows labelled by `index`, columns by the
/// computational basis |i_1 ... i_n> with i_1 most significant.
struct SchurUnitary {
  int n = 0;
  int d = 0;
  SchurIndex index;
  CMatrix matrix;
};

using SchurState = std::map<SchurLabel, Complex>;

enum class Direction { Forward, Inverse };

namespace detail {

struct CascadeKey {
  GzPattern q;
  std::vector<int> record;
  std::size_t digits = 0;

  auto operator<=>(const CascadeKey&) const = default;
  bool operator==(const CascadeKey&) const = default;
};

using CascadeState = std::map<CascadeKey, Complex>;

inline std::size_t checked_dimension(int n, int d, std::size_t limit) {
  if (n < 1 || d < 1) throw ArgumentError("Schur transform needs n >= 1 and d >= 1");
  const std::size_t dim = checked_power(static_cast<std::size_t>(d), n);
  if (dim > limit) throw ResourceError("Hilbert space dimension d^n exceeds the bound", dim, limit);
  return dim;
}

/// Runs the CG cascade on a sparse computational-basis input. The result is
/// keyed by (q, path record) with digits = 0.
inline CascadeState forward_cascade(const std::vector<std::pair<std::size_t, Complex>>& input,
                                    int n, int d, CgColumnCache& cache) {
  std::size_t tail = checked_power(static_cast<std::size_t>(d), n - 1);
  CascadeState state;
  for (const auto& [x, amplitude] : input) {
    if (amplitude == Complex{}) continue;
    const int i1 = static_cast<int>(x / tail) + 1;
    state[CascadeKey{defining_pattern(i1, d), {}, x % tail}] += amplitude;
  }
  for (int k = 1; k < n; ++k) {
    tail /= static_cast<std::size_t>(d);
    CascadeState next;
    for (const auto& [key, amplitude] : state) {
      const int i = static_cast<int>(key.digits / tail) + 1;
      const std::size_t rest = key.digits % tail;
      for (const auto& term : cache.column(key.q, i)) {
        auto record = key.record;
        record.push_back(term.j);
        next[CascadeKey{term.q, std::move(record), rest}] += amplitude * term.amplitude;
      }
    }
    state = std::move(next);
  }
  return state;
}

/// Undoes the cascade: input keyed by (q, record), output amplitudes on
/// computational basis indices.
inline std::vector<std::pair<std::size_t, Complex>> inverse_cascade(CascadeState state, int n,
                                                                    int d, CgColumnCache& cache) {
  std::size_t place = 1;
  for (int k = n - 1; k >= 1; --k) {
    CascadeState next;
    for (const auto& [key, amplitude] : state) {
      const int j = key.record.back();
      auto lambda = remove_box(key.q.lambda(), j);
      if (!lambda) throw ConsistencyError("inverse cascade: path and pattern disagree");
      auto record = key.record;
      record.pop_back();
      for (const auto& src : cache.row(*lambda, j, key.q)) {
        const std::size_t digits = static_cast<std::size_t>(src.i - 1) * place + key.digits;
        next[CascadeKey{src.q, record, digits}] += amplitude * src.amplitude;
      }
    }
    state = std::move(next);
    place *= static_cast<std::size_t>(d);
  }
  std::vector<std::pair<std::size_t, Complex>> out;
  out.reserve(state.size());
  for (const auto& [key, amplitude] : state) {
    const auto i1 = static_cast<std::size_t>(defining_index(key.q));
    out.emplace_back((i1 - 1) * place + key.digits, amplitude);
  }
  return out;
}

}  // namespace detail

/// Builds the full transform column by column; each worker keeps its own
/// CG cache, columns are written to disjoint memory.
inline SchurUnitary schur_unitary(int n, int d, const SchurOptions& options = {}) {
  const std::size_t dim = detail::checked_dimension(n, d, options.max_dimension);
  SchurUnitary out;
  out.n = n;
  out.d = d;
  out.index = SchurIndex(n, d);
  if (out.index.dimension() != dim) {
    throw ConsistencyError("Schur index dimension differs from d^n");
  }
  out.matrix = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  parallel_chunks(dim, options.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    CgColumnCache cache;
    for (std::size_t col = begin; col < end; ++col) {
      const auto state = detail::forward_cascade({{col, Complex{1.0}}}, n, d, cache);
      for (const auto& [key, amplitude] : state) {
        const auto row = out.index.row_of(key.q, key.record);
        out.matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amplitude;
      }
    }
  });
  return out;
}

/// Matrix-free transform of a dense state. Forward maps the computational
/// basis to Schur-basis order (as in SchurIndex); Inverse maps back.
inline CVector schur_apply(const CVector& state, int n, int d, Direction direction,
                           const SchurOptions& options = {}) {
  const std::size_t dim = detail::checked_dimension(n, d, options.max_dimension);
  if (static_cast<std::size_t>(state.size()) != dim) {
    throw ArgumentError("schur_apply: state length " + std::to_string(state.size()) +
                        " differs from d^n = " + std::to_string(dim));
  }
  CgColumnCache cache;
  CVector out = CVector::Zero(static_cast<Eigen::Index>(dim));
  if (direction == Direction::Forward) {
    const SchurIndex index(n, d);
    std::vector<std::pair<std::size_t, Complex>> input;
    for (std::size_t x = 0; x < dim; ++x) {
      if (state(static_cast<Eigen::Index>(x)) != Complex{}) {
        input.emplace_back(x, state(static_cast<Eigen::Index>(x)));
      }
    }
    for (const auto& [key, amplitude] : detail::forward_cascade(input, n, d, cache)) {
      out(static_cast<Eigen::Index>(index.row_of(key.q, key.record))) += amplitude;
    }
  } else {
    const SchurIndex index(n, d);
    detail::CascadeState labelled;
    for (std::size_t r = 0; r < dim; ++r) {
      const Complex amplitude = state(static_cast<Eigen::Index>(r));
      if (amplitude == Complex{}) continue;
      auto label = index.label(r);
      labelled[detail::CascadeKey{std::move(label.q), label.p.record(), 0}] += amplitude;
    }
    for (const auto& [x, amplitude] : detail::inverse_cascade(std::move(labelled), n, d, cache)) {
      out(static_cast<Eigen::Index>(x)) += amplitude;
    }
  }
  return out;
}

/// Forward transform returning explicit labels.
inline SchurState schur_apply_labelled(const CVector& state, int n, int d,
                                       const SchurOptions& options = {}) {
  const std::size_t dim = detail::checked_dimension(n, d, options.max_dimension);
  if (static_cast<std::size_t>(state.size()) != dim) {
    throw ArgumentError("schur_apply_labelled: state length differs from d^n");
  }
  std::vector<std::pair<std::size_t, Complex>> input;
  for (std::size_t x = 0; x < dim; ++x) {
    if (state(static_cast<Eigen::Index>(x)) != Complex{}) {
      input.emplace_back(x, state(static_cast<Eigen::Index>(x)));
    }
  }
  CgColumnCache cache;
  SchurState out;
  for (auto& [key, amplitude] : detail::forward_cascade(input, n, d, cache)) {
    const auto& lambda = key.q.lambda();
    out[SchurLabel{lambda, key.q, YyPath::from_record(key.record)}] += amplitude;
  }
  return out;
}

/// A Schur state with the path register replaced by its 1-based rank.
struct CompressedLabel {
  Partition lambda;
  GzPattern q;
  BigInt rank;

  std::strong_ordering operator<=>(const CompressedLabel&) const = default;
  bool operator==(const CompressedLabel&) const = default;
};

using CompressedState = std::map<CompressedLabel, Complex>;

inline CompressedState compress_p(const SchurState& state) {
  CompressedState out;
  for (const auto& [label, amplitude] : state) {
    if (label.p.lambda() != label.lambda || label.q.lambda() != label.lambda) {
      throw ArgumentError("compress_p: label components disagree on lambda");
    }
    out[CompressedLabel{label.lambda, label.q, rank_path(label.p)}] += amplitude;
  }
  return out;
}

inline SchurState decompress_p(const CompressedState& state) {
  SchurState out;
  for (const auto& [label, amplitude] : state) {
    if (label.q.lambda() != label.lambda) {
      throw ArgumentError("decompress_p: pattern does not belong to lambda");
    }
    out[SchurLabel{label.lambda, label.q, unrank_path(label.lambda, label.rank)}] += amplitude;
  }
  return out;
}

}  // namespace schurkit
