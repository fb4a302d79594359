#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "schurkit/partition.hpp"

namespace schurkit {

/// Gel'fand-Zetlin pattern: the chain q_d = lambda, q_{d-1}, ..., q_1 with
/// q_k holding at most k parts and q_{k-1} interlacing q_k. `chain()[0]` is
/// the top row q_d.
class GzPattern {
 public:
  struct Unchecked {};

  GzPattern() = default;

  explicit GzPattern(std::vector<Partition> chain) : chain_(std::move(chain)) {
    const int d = static_cast<int>(chain_.size());
    if (d < 1) throw ArgumentError("GZ pattern needs at least one row");
    for (int k = 0; k < d; ++k) {
      if (chain_[k].length() > static_cast<std::size_t>(d - k)) {
        throw ArgumentError("GZ row q_" + std::to_string(d - k) + " has too many parts");
      }
      if (k + 1 < d && !interlaces(chain_[k + 1], chain_[k], d - k)) {
        throw ArgumentError("GZ rows q_" + std::to_string(d - k - 1) + " and q_" +
                            std::to_string(d - k) + " do not interlace");
      }
    }
  }

  GzPattern(std::vector<Partition> chain, Unchecked) : chain_(std::move(chain)) {}

  int d() const noexcept { return static_cast<int>(chain_.size()); }
  const Partition& lambda() const { return chain_.front(); }
  const std::vector<Partition>& chain() const noexcept { return chain_; }

  /// Row q_level, level in [1, d].
  const Partition& row(int level) const { return chain_.at(chain_.size() - level); }

  /// (q_{d-1}, ..., q_1) as a pattern for U_{d-1}.
  GzPattern tail() const {
    if (d() < 2) throw ArgumentError("GZ pattern tail needs d >= 2");
    return GzPattern(std::vector<Partition>(chain_.begin() + 1, chain_.end()), Unchecked{});
  }

  /// Prepends a new top row (caller guarantees interlacing).
  GzPattern with_top(Partition top) const {
    std::vector<Partition> chain;
    chain.reserve(chain_.size() + 1);
    chain.push_back(std::move(top));
    chain.insert(chain.end(), chain_.begin(), chain_.end());
    return GzPattern(std::move(chain), Unchecked{});
  }

  /// Content: weight[k-1] = |q_k| - |q_{k-1}|, the number of k entries in the tableau.
  std::vector<int> weight() const {
    std::vector<int> w(chain_.size(), 0);
    int below = 0;
    for (int level = 1; level <= d(); ++level) {
      const int here = row(level).size();
      w[level - 1] = here - below;
      below = here;
    }
    return w;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < chain_.size(); ++k) {
      if (k) out += " > ";
      out += '(' + chain_[k].to_string() + ')';
    }
    return out;
  }

  auto operator<=>(const GzPattern&) const = default;
  bool operator==(const GzPattern&) const = default;

 private:
  std::vector<Partition> chain_;
};

/// Canonical GZ order: by q_{d-1} in canonical partition order, then q_{d-2}, ...
inline bool precedes(const GzPattern& a, const GzPattern& b) {
  const auto& ca = a.chain();
  const auto& cb = b.chain();
  for (std::size_t k = 1; k < ca.size() && k < cb.size(); ++k) {
    if (ca[k] != cb[k]) return precedes(ca[k], cb[k]);
  }
  return false;
}

/// Every mu with at most d-1 parts interlacing lambda, canonical order.
inline std::vector<Partition> interlacing_partitions(const Partition& lambda, int d) {
  if (d < 1) throw ArgumentError("interlacing_partitions: d must be positive");
  if (lambda.length() > static_cast<std::size_t>(d)) return {};
  std::vector<Partition> out;
  std::vector<int> current(static_cast<std::size_t>(d - 1), 0);
  // Odometer over mu_i in [lambda_{i+1}, lambda_i], first index slowest and
  // descending, which is descending lexicographic.
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == d - 1) {
      out.emplace_back(current);
      return;
    }
    for (int v = lambda[i]; v >= lambda[i + 1]; --v) {
      current[i] = v;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

/// All GZ patterns of lambda for U_d in canonical order; empty when lambda
/// has more than d rows.
inline std::vector<GzPattern> enumerate_gz(const Partition& lambda, int d) {
  if (d < 1) throw ArgumentError("enumerate_gz: d must be positive");
  if (lambda.length() > static_cast<std::size_t>(d)) return {};
  if (d == 1) return {GzPattern({lambda}, GzPattern::Unchecked{})};
  std::vector<GzPattern> out;
  for (const auto& mu : interlacing_partitions(lambda, d)) {
    for (auto& sub : enumerate_gz(mu, d - 1)) out.push_back(sub.with_top(lambda));
  }
  return out;
}

/// Position of q in enumerate_gz(q.lambda(), q.d()).
inline std::size_t gz_index(const GzPattern& q) {
  std::size_t index = 0;
  GzPattern current = q;
  while (current.d() > 1) {
    const auto& below = current.chain()[1];
    for (const auto& mu : interlacing_partitions(current.lambda(), current.d())) {
      if (mu == below) break;
      index += to_size(dim_q(mu, current.d() - 1));
    }
    current = current.tail();
  }
  return index;
}

/// The standard basis vector |i> of the defining irrep: chain {(0)^{i-1}, (1)^{d-i+1}}.
inline GzPattern defining_pattern(int i, int d) {
  if (d < 1 || i < 1 || i > d) throw ArgumentError("defining_pattern: index out of range");
  std::vector<Partition> chain;
  chain.reserve(static_cast<std::size_t>(d));
  for (int level = d; level >= 1; --level) {
    chain.push_back(level >= i ? Partition{1} : Partition{});
  }
  return GzPattern(std::move(chain), GzPattern::Unchecked{});
}

/// Index i of a pattern of (1), the inverse of defining_pattern.
inline int defining_index(const GzPattern& q) {
  if (q.lambda() != Partition{1}) throw ArgumentError("defining_index: pattern is not of (1)");
  for (int level = 1; level <= q.d(); ++level) {
    if (!q.row(level).empty()) return level;
  }
  throw ConsistencyError("defining_index: empty chain");
}

/// Semistandard Young tableau: rows nondecreasing, columns strictly increasing.
struct Ssyt {
  std::vector<std::vector<int>> rows;

  Partition shape() const {
    std::vector<int> lengths;
    for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
    return Partition(lengths);
  }

  /// "1,1,2,5/2,3,3/3/5"
  std::string to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r) out += '/';
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (c) out += ',';
        out += std::to_string(rows[r][c]);
      }
    }
    return out;
  }

  static Ssyt parse(std::string_view text) {
    Ssyt t;
    if (text.empty()) return t;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find('/', pos);
      if (next == std::string_view::npos) next = text.size();
      auto row_text = text.substr(pos, next - pos);
      std::vector<int> row;
      std::size_t p = 0;
      while (p <= row_text.size()) {
        auto comma = row_text.find(',', p);
        if (comma == std::string_view::npos) comma = row_text.size();
        auto field = row_text.substr(p, comma - p);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
          throw ArgumentError("malformed tableau text: '" + std::string(text) + "'");
        }
        row.push_back(value);
        p = comma + 1;
      }
      t.rows.push_back(std::move(row));
      pos = next + 1;
    }
    return t;
  }

  bool operator==(const Ssyt&) const = default;
};

/// Writes k into every box of q_k that is not in q_{k-1}.
inline Ssyt gz_to_ssyt(const GzPattern& q) {
  Ssyt t;
  t.rows.resize(q.lambda().length());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    int below = 0;
    for (int level = 1; level <= q.d(); ++level) {
      const int here = q.row(level)[r];
      for (int c = below; c < here; ++c) t.rows[r].push_back(level);
      below = here;
    }
  }
  return t;
}

/// Inverse of gz_to_ssyt; q_k row r counts entries <= k in row r.
inline GzPattern ssyt_to_gz(const Ssyt& t, int d) {
  if (d < 1) throw ArgumentError("ssyt_to_gz: d must be positive");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) throw ArgumentError("ssyt_to_gz: empty tableau row");
    if (r > 0 && row.size() > t.rows[r - 1].size()) {
      throw ArgumentError("ssyt_to_gz: row lengths must be nonincreasing");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > d) throw ArgumentError("ssyt_to_gz: entry out of range [1, d]");
      if (c > 0 && row[c] < row[c - 1]) throw ArgumentError("ssyt_to_gz: row is decreasing");
      if (r > 0 && row[c] <= t.rows[r - 1][c]) {
        throw ArgumentError("ssyt_to_gz: column is not strictly increasing");
      }
    }
  }
  std::vector<Partition> chain;
  for (int level = d; level >= 1; --level) {
    std::vector<int> lengths;
    for (const auto& row : t.rows) {
      lengths.push_back(static_cast<int>(
          std::count_if(row.begin(), row.end(), [level](int v) { return v <= level; })));
    }
    chain.emplace_back(std::move(lengths));
  }
  return GzPattern(std::move(chain));
}

}  // namespace schurkit
