#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "schurkit/circuit.hpp"
#include "schurkit/clebsch_gordan.hpp"
#include "schurkit/schur.hpp"

namespace schurkit::json {

/// Doubles use 17 significant digits so values round-trip exactly.
inline void write_number(std::ostream& os, double v) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

inline void write_string(std::ostream& os, std::string_view s) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
          os << buf;
        } else {
          os << c;
        }
    }
  }
  os << '"';
}

inline void write_complex(std::ostream& os, Complex z) {
  os << '[';
  write_number(os, z.real());
  os << ',';
  write_number(os, z.imag());
  os << ']';
}

/// Row-major [[[re, im], ...], ...].
template <class Derived>
void write_matrix(std::ostream& os, const Eigen::MatrixBase<Derived>& m) {
  os << '[';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) os << ",\n  ";
    os << '[';
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      write_complex(os, Complex(m(r, c)));
    }
    os << ']';
  }
  os << ']';
}

/// Row-major [[x, ...], ...] for real matrices.
inline void write_real_matrix(std::ostream& os, const RMatrix& m) {
  os << '[';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      write_number(os, m(r, c));
    }
    os << ']';
  }
  os << ']';
}

inline void write_cg_block(std::ostream& os, const CgBlock& block) {
  os << "{\"lambda\": ";
  write_string(os, block.lambda.to_string());
  os << ", \"d\": " << block.d << ",\n \"rows\": [";
  for (std::size_t r = 0; r < block.rows.size(); ++r) {
    if (r) os << ", ";
    os << "{\"j\": " << block.rows[r].j << ", \"gz\": ";
    write_string(os, block.rows[r].q.to_string());
    os << '}';
  }
  os << "],\n \"cols\": [";
  for (std::size_t c = 0; c < block.cols.size(); ++c) {
    if (c) os << ", ";
    os << "{\"gz\": ";
    write_string(os, block.cols[c].q.to_string());
    os << ", \"i\": " << block.cols[c].i << '}';
  }
  os << "],\n \"matrix\": ";
  write_matrix(os, block.matrix);
  os << "}\n";
}

/// "i1,i2,...,in" with 1-based digits.
inline std::string basis_label(std::size_t x, int n, int d) {
  std::vector<std::string> digits(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = std::to_string(x % static_cast<std::size_t>(d) + 1);
    x /= static_cast<std::size_t>(d);
  }
  std::string out;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k) out += ',';
    out += digits[k];
  }
  return out;
}

inline void write_schur(std::ostream& os, const SchurUnitary& schur) {
  const auto dim = schur.index.dimension();
  os << "{\"n\": " << schur.n << ", \"d\": " << schur.d << ",\n \"row_labels\": [";
  for (std::size_t r = 0; r < dim; ++r) {
    const auto label = schur.index.label(r);
    if (r) os << ",\n  ";
    os << "{\"lambda\": ";
    write_string(os, label.lambda.to_string());
    os << ", \"gz\": ";
    write_string(os, label.q.to_string());
    os << ", \"path\": ";
    write_string(os, label.p.to_string());
    os << '}';
  }
  os << "],\n \"cols\": [";
  for (std::size_t c = 0; c < dim; ++c) {
    if (c) os << ", ";
    write_string(os, basis_label(c, schur.n, schur.d));
  }
  os << "],\n \"matrix\": ";
  write_matrix(os, schur.matrix);
  os << "}\n";
}

inline void write_gate_list(std::ostream& os, const GateList& list) {
  os << "{\"size\": " << list.size << ", \"gates\": [";
  for (std::size_t k = 0; k < list.gates.size(); ++k) {
    const auto& g = list.gates[k];
    if (k) os << ',';
    os << "\n  ";
    if (g.kind == Gate::Kind::Rotation) {
      os << "{\"kind\": \"rot\", \"a\": " << g.a << ", \"b\": " << g.b << ", \"block\": ";
      write_matrix(os, g.block);
      os << '}';
    } else {
      os << "{\"kind\": \"phase\", \"a\": " << g.a << ", \"value\": ";
      write_complex(os, g.value);
      os << '}';
    }
  }
  os << "]}\n";
}

}  // namespace schurkit::json
