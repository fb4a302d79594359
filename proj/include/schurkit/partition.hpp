#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurkit/common.hpp"

namespace schurkit {

/// Integer partition in normal form: nonincreasing positive parts, trailing
/// zeros stripped. Labels irreps of both S_n and U_d.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw ArgumentError("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw ArgumentError("partition parts must be nonincreasing");
      }
    }
    strip();
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Part i (0-based); rows beyond the stored length are zero.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// Number of nonzero rows.
  std::size_t length() const noexcept { return parts_.size(); }

  /// Number of boxes.
  int size() const noexcept {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
  }

  bool empty() const noexcept { return parts_.empty(); }
  const std::vector<int>& parts() const noexcept { return parts_; }

  std::vector<int> padded(std::size_t d) const {
    std::vector<int> out(std::max(d, parts_.size()), 0);
    std::copy(parts_.begin(), parts_.end(), out.begin());
    return out;
  }

  /// Lexicographic on the zero-padded sequences (equivalent to comparing
  /// normal forms since parts are nonnegative).
  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

  std::string to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  /// Parses "4,3,1,1"; trailing zeros and the empty string / "0" are accepted.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    auto trimmed = text;
    while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '(')) {
      trimmed.remove_prefix(1);
    }
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == ')')) {
      trimmed.remove_suffix(1);
    }
    if (trimmed.empty()) return Partition{};
    std::size_t pos = 0;
    while (pos <= trimmed.size()) {
      auto next = trimmed.find(',', pos);
      if (next == std::string_view::npos) next = trimmed.size();
      auto field = trimmed.substr(pos, next - pos);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ArgumentError("malformed partition text: '" + std::string(text) + "'");
      }
      parts.push_back(value);
      pos = next + 1;
    }
    return Partition(std::move(parts));
  }

 private:
  void strip() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  std::vector<int> parts_;
};

/// Canonical order: descending lexicographic. `precedes(a, b)` is true when
/// a is listed before b.
inline bool precedes(const Partition& a, const Partition& b) { return a > b; }

struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const { return precedes(a, b); }
};

namespace detail {

inline void enumerate_partitions_into(int remaining, int rows_left, int max_part,
                                      std::vector<int>& prefix,
                                      std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (rows_left == 0) return;
  // The largest remaining part must still fit: rows_left * part >= remaining.
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    if (part * rows_left < remaining) break;
    prefix.push_back(part);
    enumerate_partitions_into(remaining - part, rows_left - 1, part, prefix, out);
    prefix.pop_back();
  }
}

inline BigInt factorial(int k) {
  BigInt out = 1;
  for (int m = 2; m <= k; ++m) out *= m;
  return out;
}

}  // namespace detail

/// All partitions of n into at most d parts, in canonical order.
inline std::vector<Partition> enumerate_partitions(int d, int n) {
  if (d < 1) throw ArgumentError("enumerate_partitions: d must be positive");
  if (n < 0) throw ArgumentError("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::enumerate_partitions_into(n, d, n, prefix, out);
  return out;
}

/// lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_{d-1} >= lambda_d.
inline bool interlaces(const Partition& mu, const Partition& lambda, int d) {
  if (d < 1) throw ArgumentError("interlaces: d must be positive");
  if (lambda.length() > static_cast<std::size_t>(d)) {
    throw ArgumentError("interlaces: lambda has more than d parts");
  }
  if (mu.length() > static_cast<std::size_t>(d - 1)) {
    throw ArgumentError("interlaces: mu has more than d-1 parts");
  }
  for (int i = 0; i + 1 < d; ++i) {
    if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) return false;
  }
  return true;
}

/// Infers d = max(len(lambda), len(mu) + 1).
inline bool interlaces(const Partition& mu, const Partition& lambda) {
  const auto d = std::max(lambda.length(), mu.length() + 1);
  return interlaces(mu, lambda, static_cast<int>(d));
}

/// lambda + e_j (j is 1-based) when it is a partition with at most d parts.
inline std::optional<Partition> add_box(const Partition& lambda, int j, int d) {
  if (d < 1 || j < 1 || j > d) throw ArgumentError("add_box: row index out of range");
  if (lambda.length() > static_cast<std::size_t>(d)) {
    throw ArgumentError("add_box: lambda has more than d parts");
  }
  if (j > 1 && lambda[j - 2] <= lambda[j - 1]) return std::nullopt;
  auto parts = lambda.padded(static_cast<std::size_t>(j));
  ++parts[j - 1];
  return Partition(std::move(parts));
}

/// lambda - e_j (j is 1-based) when it is still a partition.
inline std::optional<Partition> remove_box(const Partition& lambda, int j) {
  if (j < 1) throw ArgumentError("remove_box: row index out of range");
  if (lambda[j - 1] == 0 || lambda[j - 1] - 1 < lambda[j]) return std::nullopt;
  auto parts = lambda.parts();
  --parts[j - 1];
  return Partition(std::move(parts));
}

/// lambda - box: every partition obtained by removing one box, canonical order.
inline std::vector<Partition> remove_box_set(const Partition& lambda) {
  std::vector<Partition> out;
  // Removing from a lower row gives a lexicographically larger result, so
  // walking rows bottom-up yields canonical order directly.
  for (int j = static_cast<int>(lambda.length()); j >= 1; --j) {
    if (auto mu = remove_box(lambda, j)) out.push_back(std::move(*mu));
  }
  return out;
}

/// Dimension of the S_n irrep: number of standard Young tableaux of shape lambda.
inline BigInt dim_p(const Partition& lambda) {
  const int d = static_cast<int>(lambda.length());
  const int n = lambda.size();
  BigInt numerator = detail::factorial(n);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) numerator *= (lambda[i] - lambda[j] + j - i);
  }
  BigInt denominator = 1;
  for (int i = 0; i < d; ++i) denominator *= detail::factorial(lambda[i] + d - 1 - i);
  return numerator / denominator;
}

/// Dimension of the U_d irrep: number of semistandard tableaux of shape lambda
/// with entries at most d. Zero when lambda has more than d rows.
inline BigInt dim_q(const Partition& lambda, int d) {
  if (d < 1) throw ArgumentError("dim_q: d must be positive");
  if (lambda.length() > static_cast<std::size_t>(d)) return 0;
  BigInt numerator = 1;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) numerator *= (lambda[i] - lambda[j] + j - i);
  }
  BigInt denominator = 1;
  for (int m = 1; m <= d - 1; ++m) denominator *= detail::factorial(m);
  return numerator / denominator;
}

}  // namespace schurkit

template <>
struct std::hash<schurkit::Partition> {
  std::size_t operator()(const schurkit::Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int part : p.parts()) {
      h ^= std::hash<int>{}(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
