#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "schurkit/gz_pattern.hpp"
#include "schurkit/yy_path.hpp"

namespace schurkit {

/// A Schur basis label |lambda, q, p>.
struct SchurLabel {
  Partition lambda;
  GzPattern q;
  YyPath p;

  auto operator<=>(const SchurLabel&) const = default;
  bool operator==(const SchurLabel&) const = default;
};

/// Field widths of the fixed register layout for (n, d).
struct RegisterLayout {
  int n = 0;
  int d = 0;
  int count_width = 0;  // ceil(log2(n+1)) bits per row length
  int index_width = 0;  // ceil(log2(d)) bits per j field

  RegisterLayout(int n_, int d_) : n(n_), d(d_) {
    if (n < 1 || d < 1) throw ArgumentError("register layout needs n >= 1 and d >= 1");
    count_width = ceil_log2(static_cast<unsigned>(n) + 1);
    index_width = ceil_log2(static_cast<unsigned>(d));
  }

  std::size_t lambda_bits() const { return static_cast<std::size_t>(d) * count_width; }
  std::size_t gz_bits() const {
    return static_cast<std::size_t>(d) * (d + 1) / 2 * count_width;
  }
  std::size_t path_bits() const { return static_cast<std::size_t>(n - 1) * index_width; }
  std::size_t total_bits() const { return lambda_bits() + gz_bits() + path_bits(); }

  static int ceil_log2(unsigned v) {
    return v <= 1 ? 0 : static_cast<int>(std::bit_width(v - 1));
  }
};

namespace detail {

inline void append_field(std::string& bits, unsigned value, int width) {
  if (width < 32 && (value >> width) != 0) {
    throw ArgumentError("register field value does not fit its width");
  }
  for (int b = width - 1; b >= 0; --b) bits += ((value >> b) & 1u) ? '1' : '0';
}

inline unsigned read_field(std::string_view bits, std::size_t& pos, int width) {
  unsigned value = 0;
  for (int b = 0; b < width; ++b) {
    const char c = bits[pos++];
    if (c != '0' && c != '1') throw ArgumentError("register string holds a non-bit character");
    value = (value << 1) | static_cast<unsigned>(c == '1');
  }
  return value;
}

}  // namespace detail

/// lambda as d fields; q as the triangular array q_d, ..., q_1 (row-length
/// fields); p as n-1 fields holding j_k - 1. All fields big-endian.
inline std::string encode_registers(const Partition& lambda, const GzPattern& q, const YyPath& p,
                                    int n, int d) {
  RegisterLayout layout(n, d);
  if (lambda.size() != n || lambda.length() > static_cast<std::size_t>(d)) {
    throw ArgumentError("encode_registers: lambda is not in I_{d,n}");
  }
  if (q.d() != d || q.lambda() != lambda) {
    throw ArgumentError("encode_registers: GZ pattern does not belong to lambda");
  }
  if (p.lambda() != lambda) throw ArgumentError("encode_registers: path does not end at lambda");

  std::string bits;
  bits.reserve(layout.total_bits());
  for (int v : lambda.padded(static_cast<std::size_t>(d))) {
    detail::append_field(bits, static_cast<unsigned>(v), layout.count_width);
  }
  for (int level = d; level >= 1; --level) {
    const auto& row = q.row(level);
    for (int r = 0; r < level; ++r) {
      detail::append_field(bits, static_cast<unsigned>(row[r]), layout.count_width);
    }
  }
  for (int j : p.record()) {
    if (j > d) throw ArgumentError("encode_registers: path uses a row beyond d");
    detail::append_field(bits, static_cast<unsigned>(j - 1), layout.index_width);
  }
  return bits;
}

inline SchurLabel decode_registers(std::string_view bits, int n, int d) {
  RegisterLayout layout(n, d);
  if (bits.size() != layout.total_bits()) {
    throw ArgumentError("decode_registers: expected " + std::to_string(layout.total_bits()) +
                        " bits, got " + std::to_string(bits.size()));
  }
  std::size_t pos = 0;
  std::vector<int> lambda_parts;
  for (int r = 0; r < d; ++r) {
    lambda_parts.push_back(static_cast<int>(detail::read_field(bits, pos, layout.count_width)));
  }
  Partition lambda(lambda_parts);
  if (lambda.size() != n) throw ArgumentError("decode_registers: lambda does not partition n");

  std::vector<Partition> chain;
  for (int level = d; level >= 1; --level) {
    std::vector<int> row;
    for (int r = 0; r < level; ++r) {
      row.push_back(static_cast<int>(detail::read_field(bits, pos, layout.count_width)));
    }
    chain.emplace_back(std::move(row));
  }
  GzPattern q(std::move(chain));
  if (q.lambda() != lambda) throw ArgumentError("decode_registers: GZ top row differs from lambda");

  std::vector<int> record;
  for (int k = 0; k + 1 < n; ++k) {
    record.push_back(static_cast<int>(detail::read_field(bits, pos, layout.index_width)) + 1);
  }
  for (int j : record) {
    if (j > d) throw ArgumentError("decode_registers: path field exceeds d");
  }
  YyPath p = YyPath::from_record(std::move(record));
  if (p.lambda() != lambda) throw ArgumentError("decode_registers: path does not end at lambda");
  return SchurLabel{std::move(lambda), std::move(q), std::move(p)};
}

}  // namespace schurkit
