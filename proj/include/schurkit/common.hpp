#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace schurkit {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

/// Bad input: malformed labels, inconsistent sizes, out-of-range ranks.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested object would exceed the configured size bound.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t required, std::size_t limit)
      : std::runtime_error(what + " (required " + std::to_string(required) +
                           ", limit " + std::to_string(limit) + ")"),
        required_(required),
        limit_(limit) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t required_;
  std::size_t limit_;
};

/// An internal invariant failed: signals a convention bug rather than bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::size_t to_size(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::size_t>::max()) {
    throw ResourceError("integer does not fit in an index", 0,
                        std::numeric_limits<std::size_t>::max());
  }
  return value.convert_to<std::size_t>();
}

/// d^n, or nullopt-style saturation to SIZE_MAX on overflow.
inline std::size_t checked_power(std::size_t base, int exponent) {
  std::size_t result = 1;
  for (int k = 0; k < exponent; ++k) {
    if (base != 0 && result > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    result *= base;
  }
  return result;
}

}  // namespace schurkit
