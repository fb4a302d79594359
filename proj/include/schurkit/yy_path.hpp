#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "schurkit/partition.hpp"

namespace schurkit {

/// Young-Yamanouchi basis vector: the chain p_n = lambda, ..., p_1 = (1) with
/// one box removed per step. Also kept as the box-addition record
/// (j_1, ..., j_{n-1}) where p_{k+1} = p_k + e_{j_k}.
class YyPath {
 public:
  YyPath() = default;

  /// From the record j_1..j_{n-1} (1-based rows).
  static YyPath from_record(std::vector<int> record) {
    YyPath path;
    std::vector<Partition> ascending{Partition{1}};
    for (int j : record) {
      if (j < 1) throw ArgumentError("YY record entries must be >= 1");
      const auto& last = ascending.back();
      const int rows = static_cast<int>(last.length()) + 1;
      if (j > rows) throw ArgumentError("YY record adds a box to a detached row");
      auto next = add_box(last, j, rows);
      if (!next) throw ArgumentError("YY record produces a non-partition");
      ascending.push_back(std::move(*next));
    }
    path.chain_.assign(ascending.rbegin(), ascending.rend());
    path.record_ = std::move(record);
    return path;
  }

  /// From the chain p_n, ..., p_1.
  static YyPath from_chain(std::vector<Partition> chain) {
    if (chain.empty() || chain.back() != Partition{1}) {
      throw ArgumentError("YY chain must end at (1)");
    }
    std::vector<int> record;
    for (std::size_t k = chain.size() - 1; k > 0; --k) {
      const auto& lower = chain[k];
      const auto& upper = chain[k - 1];
      int added = 0;
      for (int j = 1; j <= static_cast<int>(upper.length()); ++j) {
        auto candidate = remove_box(upper, j);
        if (candidate && *candidate == lower) {
          added = j;
          break;
        }
      }
      if (added == 0) throw ArgumentError("YY chain step does not remove exactly one box");
      record.push_back(added);
    }
    YyPath path;
    path.chain_ = std::move(chain);
    path.record_ = std::move(record);
    return path;
  }

  const Partition& lambda() const { return chain_.front(); }
  int n() const noexcept { return static_cast<int>(chain_.size()); }

  /// p_n first.
  const std::vector<Partition>& chain() const noexcept { return chain_; }
  const std::vector<int>& record() const noexcept { return record_; }

  /// p_k for k in [1, n].
  const Partition& at(int k) const { return chain_.at(chain_.size() - k); }

  /// "j1,j2,...,j{n-1}"; empty for n = 1.
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < record_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(record_[k]);
    }
    return out;
  }

  static YyPath parse(std::string_view text) {
    std::vector<int> record;
    std::size_t pos = 0;
    while (!text.empty() && pos <= text.size()) {
      auto next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      auto field = text.substr(pos, next - pos);
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ArgumentError("malformed path text: '" + std::string(text) + "'");
      }
      record.push_back(value);
      pos = next + 1;
    }
    return from_record(std::move(record));
  }

  bool operator==(const YyPath& other) const { return record_ == other.record_; }
  auto operator<=>(const YyPath& other) const { return record_ <=> other.record_; }

 private:
  std::vector<Partition> chain_;
  std::vector<int> record_;
};

/// Canonical path order: compare p_{n-1}, then p_{n-2}, ... by partition order.
inline bool precedes(const YyPath& a, const YyPath& b) {
  const auto& ca = a.chain();
  const auto& cb = b.chain();
  for (std::size_t k = 1; k < ca.size() && k < cb.size(); ++k) {
    if (ca[k] != cb[k]) return precedes(ca[k], cb[k]);
  }
  return false;
}

namespace detail {

inline void enumerate_paths_into(const Partition& lambda, std::vector<Partition>& prefix,
                                 std::vector<YyPath>& out) {
  prefix.push_back(lambda);
  if (lambda == Partition{1}) {
    out.push_back(YyPath::from_chain(prefix));
  } else {
    for (const auto& mu : remove_box_set(lambda)) enumerate_paths_into(mu, prefix, out);
  }
  prefix.pop_back();
}

}  // namespace detail

/// Every removal chain from lambda down to (1), in canonical (= rank) order.
inline std::vector<YyPath> enumerate_paths(const Partition& lambda) {
  if (lambda.size() < 1) throw ArgumentError("enumerate_paths: lambda must be nonempty");
  std::vector<YyPath> out;
  std::vector<Partition> prefix;
  detail::enumerate_paths_into(lambda, prefix, out);
  return out;
}

/// 1-based rank: 1 + sum_{k=2}^{n} sum_{mu in p_k - box, mu before p_{k-1}} dim_p(mu).
inline BigInt rank_path(const YyPath& p) {
  BigInt rank = 1;
  for (int k = p.n(); k >= 2; --k) {
    const auto& next = p.at(k - 1);
    for (const auto& mu : remove_box_set(p.at(k))) {
      if (!precedes(mu, next)) break;
      rank += dim_p(mu);
    }
  }
  return rank;
}

/// Inverse of rank_path over the paths of lambda.
inline YyPath unrank_path(const Partition& lambda, const BigInt& rank) {
  if (lambda.size() < 1) throw ArgumentError("unrank_path: lambda must be nonempty");
  if (rank < 1 || rank > dim_p(lambda)) {
    throw ArgumentError("unrank_path: rank out of range for (" + lambda.to_string() + ")");
  }
  std::vector<Partition> chain{lambda};
  BigInt remaining = rank - 1;
  while (chain.back() != Partition{1}) {
    bool placed = false;
    for (const auto& mu : remove_box_set(chain.back())) {
      const BigInt block = dim_p(mu);
      if (remaining < block) {
        chain.push_back(mu);
        placed = true;
        break;
      }
      remaining -= block;
    }
    if (!placed) throw ConsistencyError("unrank_path: branching dimensions do not add up");
  }
  return YyPath::from_chain(std::move(chain));
}

}  // namespace schurkit
