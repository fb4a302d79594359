#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "schurkit/schur.hpp"

namespace schurkit {

inline constexpr std::size_t kOracleMaxDimension = 4096;

/// A bijection on [n], stored as 1-based images s(1), ..., s(n).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
        throw ArgumentError("permutation images must list 1..n exactly once");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
  }

  /// Swaps a and b (1-based).
  static Permutation transposition(int n, int a, int b) {
    auto s = identity(n);
    if (a < 1 || b < 1 || a > n || b > n) throw ArgumentError("transposition out of range");
    std::swap(s.images_[static_cast<std::size_t>(a - 1)], s.images_[static_cast<std::size_t>(b - 1)]);
    return s;
  }

  template <class Rng>
  static Permutation random(int n, Rng& rng) {
    auto s = identity(n);
    // Fisher-Yates with an explicit distribution so the result only depends
    // on the engine's output sequence.
    for (int k = n - 1; k > 0; --k) {
      std::uniform_int_distribution<int> pick(0, k);
      std::swap(s.images_[static_cast<std::size_t>(k)], s.images_[static_cast<std::size_t>(pick(rng))]);
    }
    return s;
  }

  int n() const noexcept { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const noexcept { return images_; }
  int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }

  /// (*this o other)(k) = (*this)(other(k)).
  Permutation operator*(const Permutation& other) const {
    if (other.n() != n()) throw ArgumentError("composing permutations of different degree");
    std::vector<int> images(images_.size());
    for (std::size_t k = 0; k < images.size(); ++k) {
      images[k] = images_[static_cast<std::size_t>(other.images_[k] - 1)];
    }
    return Permutation(std::move(images));
  }

  Permutation inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t k = 0; k < images.size(); ++k) {
      images[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
    }
    return Permutation(std::move(images));
  }

  int sign() const {
    std::vector<bool> visited(images_.size(), false);
    int parity = 0;
    for (std::size_t k = 0; k < images_.size(); ++k) {
      if (visited[k]) continue;
      std::size_t len = 0;
      for (std::size_t c = k; !visited[c]; c = static_cast<std::size_t>(images_[c] - 1)) {
        visited[c] = true;
        ++len;
      }
      parity += static_cast<int>(len - 1);
    }
    return parity % 2 == 0 ? 1 : -1;
  }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

namespace detail {

inline std::size_t oracle_dimension(int n, int d) {
  if (n < 1 || d < 1) throw ArgumentError("oracle needs n >= 1 and d >= 1");
  const auto dim = checked_power(static_cast<std::size_t>(d), n);
  if (dim > kOracleMaxDimension) {
    throw ResourceError("oracle matrix dimension d^n exceeds the bound", dim, kOracleMaxDimension);
  }
  return dim;
}

/// |z| without the overflow guards of std::abs, for residual scans.
inline double magnitude(Complex z) { return std::sqrt(z.real() * z.real() + z.imag() * z.imag()); }

/// Plain complex product (no C99 Annex G NaN recovery).
inline Complex multiply(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline std::vector<int> digits_of(std::size_t x, int n, int d) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = static_cast<int>(x % static_cast<std::size_t>(d));
    x /= static_cast<std::size_t>(d);
  }
  return digits;
}

}  // namespace detail

/// image[x] = y where P(s)|x> = |y>, i.e. y_k = x_{s^{-1}(k)}.
inline std::vector<std::size_t> permutation_action(const Permutation& s, int d) {
  const int n = s.n();
  const std::size_t dim = checked_power(static_cast<std::size_t>(d), n);
  const auto inv = s.inverse();
  std::vector<std::size_t> image(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const auto digits = detail::digits_of(x, n, d);
    std::size_t y = 0;
    for (int k = 1; k <= n; ++k) {
      y = y * static_cast<std::size_t>(d) + static_cast<std::size_t>(digits[static_cast<std::size_t>(inv(k) - 1)]);
    }
    image[x] = y;
  }
  return image;
}

inline CMatrix perm_matrix(const Permutation& s, int d) {
  const auto dim = detail::oracle_dimension(s.n(), d);
  const auto image = permutation_action(s, d);
  CMatrix p = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    p(static_cast<Eigen::Index>(image[x]), static_cast<Eigen::Index>(x)) = 1.0;
  }
  return p;
}

inline double unitarity_residual(const CMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

/// U^{(x) n} with the first tensor factor most significant.
inline CMatrix tensor_power(const CMatrix& u, int n) {
  if (u.rows() != u.cols() || u.rows() < 1) throw ArgumentError("tensor_power: U must be square");
  if (unitarity_residual(u) > 1e-10) throw ArgumentError("tensor_power: U is not unitary");
  detail::oracle_dimension(n, static_cast<int>(u.rows()));
  CMatrix out = u;
  for (int k = 1; k < n; ++k) {
    CMatrix next(out.rows() * u.rows(), out.cols() * u.cols());
    for (Eigen::Index a = 0; a < out.rows(); ++a) {
      for (Eigen::Index b = 0; b < out.cols(); ++b) {
        next.block(a * u.rows(), b * u.cols(), u.rows(), u.cols()) = out(a, b) * u;
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Haar-distributed d x d unitary: QR of a complex Gaussian matrix with the
/// phases of R's diagonal moved into Q.
template <class Rng>
CMatrix haar_unitary(int d, Rng& rng) {
  if (d < 1) throw ArgumentError("haar_unitary: d must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix z(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < d; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

/// Standard Young tableau: 1..n each once, increasing along rows and columns.
struct StandardTableauFilling {
  Partition shape;
  std::vector<std::vector<int>> rows;

  StandardTableauFilling() = default;

  explicit StandardTableauFilling(std::vector<std::vector<int>> filling) : rows(std::move(filling)) {
    std::vector<int> lengths;
    for (const auto& row : rows) {
      if (row.empty()) throw ArgumentError("standard tableau rows must be nonempty");
      lengths.push_back(static_cast<int>(row.size()));
    }
    shape = Partition(lengths);
    const int n = shape.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        const int v = rows[r][c];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
          throw ArgumentError("standard tableau must contain 1..n exactly once");
        }
        seen[static_cast<std::size_t>(v)] = true;
        if (c > 0 && v <= rows[r][c - 1]) throw ArgumentError("standard tableau row not increasing");
        if (r > 0 && v <= rows[r - 1][c]) throw ArgumentError("standard tableau column not increasing");
      }
    }
  }

  int n() const { return shape.size(); }

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
};

/// All standard fillings of a shape, by placing n, n-1, ... at removable corners.
inline std::vector<StandardTableauFilling> enumerate_standard_tableaux(const Partition& shape) {
  std::vector<StandardTableauFilling> out;
  if (shape.empty()) return out;
  for (const auto& path : enumerate_paths(shape)) {
    std::vector<std::vector<int>> rows(shape.length());
    rows[0].push_back(1);
    int entry = 2;
    for (int j : path.record()) rows[static_cast<std::size_t>(j - 1)].push_back(entry++);
    out.emplace_back(std::move(rows));
  }
  return out;
}

namespace detail {

/// All permutations preserving each of the given position sets.
inline std::vector<Permutation> set_stabilizer(const std::vector<std::vector<int>>& sets, int n) {
  std::vector<Permutation> group{Permutation::identity(n)};
  for (const auto& set : sets) {
    if (set.size() < 2) continue;
    auto order = set;
    std::sort(order.begin(), order.end());
    std::vector<Permutation> local;
    auto arrangement = order;
    do {
      std::vector<int> images(static_cast<std::size_t>(n));
      std::iota(images.begin(), images.end(), 1);
      for (std::size_t k = 0; k < order.size(); ++k) {
        images[static_cast<std::size_t>(order[k] - 1)] = arrangement[k];
      }
      local.emplace_back(std::move(images));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    std::vector<Permutation> next;
    next.reserve(group.size() * local.size());
    for (const auto& g : group) {
      for (const auto& l : local) next.push_back(g * l);
    }
    group = std::move(next);
  }
  return group;
}

}  // namespace detail

/// (dim_P / n!) (sum_{c in Col} sgn(c) P(c)) (sum_{r in Row} P(r)).
inline CMatrix young_symmetrizer(const StandardTableauFilling& t, int d) {
  const int n = t.n();
  if (n < 1) throw ArgumentError("young_symmetrizer: empty tableau");
  const auto dim = detail::oracle_dimension(n, d);
  std::vector<std::vector<int>> columns(t.rows.front().size());
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) columns[c].push_back(row[c]);
  }
  const auto D = static_cast<Eigen::Index>(dim);
  RMatrix row_sum = RMatrix::Zero(D, D);
  for (const auto& r : detail::set_stabilizer(t.rows, n)) {
    const auto image = permutation_action(r, d);
    for (std::size_t x = 0; x < dim; ++x) row_sum(static_cast<Eigen::Index>(image[x]), static_cast<Eigen::Index>(x)) += 1.0;
  }
  RMatrix col_sum = RMatrix::Zero(D, D);
  for (const auto& c : detail::set_stabilizer(columns, n)) {
    const auto image = permutation_action(c, d);
    const double sgn = c.sign();
    for (std::size_t x = 0; x < dim; ++x) col_sum(static_cast<Eigen::Index>(image[x]), static_cast<Eigen::Index>(x)) += sgn;
  }
  const double scale = dim_p(t.shape).convert_to<double>() / detail::factorial(n).convert_to<double>();
  RMatrix pi = scale * (col_sum * row_sum);
  return pi.cast<Complex>();
}

/// s_lambda(x) as a sum over semistandard tableaux of prod x_{entry}.
inline Complex schur_polynomial(const Partition& lambda, const std::vector<Complex>& x) {
  const int d = static_cast<int>(x.size());
  if (d < 1) throw ArgumentError("schur_polynomial: need at least one variable");
  Complex total{};
  for (const auto& q : enumerate_gz(lambda, d)) {
    Complex term{1.0};
    for (const auto& row : gz_to_ssyt(q).rows) {
      for (int v : row) term *= x[static_cast<std::size_t>(v - 1)];
    }
    total += term;
  }
  return total;
}

/// Computes U_Sch X U_Sch^dagger. When U_Sch is real and weight preserving
/// (it maps each weight sector of the computational basis onto the Schur
/// rows of the same GZ weight) the products run sector by sector.
class SchurConjugator {
 public:
  explicit SchurConjugator(const SchurUnitary& schur) : schur_(&schur) {
    const auto dim = schur.index.dimension();
    const auto& m = schur.matrix;
    row_entries_.resize(dim);
    for (std::size_t x = 0; x < dim; ++x) {
      for (std::size_t r = 0; r < dim; ++r) {
        const Complex v = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(x));
        if (v != Complex{}) row_entries_[r].emplace_back(x, v);
      }
    }
    for (const auto& row : row_entries_) nonzeros_ += row.size();
    build_sectors();
  }

  bool structured() const noexcept { return structured_; }
  const SchurUnitary& schur() const noexcept { return *schur_; }

  /// U_Sch X U_Sch^dagger for an arbitrary D x D matrix X.
  CMatrix conjugate(const CMatrix& x) const {
    check_square(x);
    const CMatrix& s = schur_->matrix;
    if (!structured_) return s * x * s.adjoint();
    // S X S^T = ((X S^T)^T S^T)^T since S is real.
    return times_st(times_st(x).transpose()).transpose();
  }

  /// U_Sch (U^{(x) n} P(s)) U_Sch^dagger.
  CMatrix conjugate(const CMatrix& u, const Permutation& s) const {
    const int n = schur_->n;
    const int d = schur_->d;
    if (s.n() != n) throw ArgumentError("conjugate: permutation degree differs from n");
    if (u.rows() != d || u.cols() != d) throw ArgumentError("conjugate: U must be d x d");
    if (unitarity_residual(u) > 1e-10) throw ArgumentError("conjugate: U is not unitary");
    const auto dim = static_cast<Eigen::Index>(schur_->index.dimension());
    const auto image = permutation_action(s, d);
    const double sparse_cost = static_cast<double>(nonzeros_);
    const double dense_cost = static_cast<double>(n) * d * static_cast<double>(dim);
    if (sparse_cost < dense_cost) {
      // Column r of M is S U^{(x) n} P(s) S^dagger e_r, built from the
      // nonzeros of row r of S.
      CMatrix m(dim, dim);
      CVector y(dim);
      CVector product(dim);
      for (Eigen::Index r = 0; r < dim; ++r) {
        y.setZero();
        for (const auto& [x, v] : row_entries_[static_cast<std::size_t>(r)]) {
          product_state(u, image[x], n, d, product);
          y += std::conj(v) * product;
        }
        auto col = m.col(r);
        for (Eigen::Index a = 0; a < dim; ++a) {
          Complex acc{};
          for (const auto& [x, v] : row_entries_[static_cast<std::size_t>(a)]) {
            acc += detail::multiply(v, y(static_cast<Eigen::Index>(x)));
          }
          col(a) = acc;
        }
      }
      return m;
    }

    if (!structured_) {
      return schur_->matrix * (tensor_power(u, n) * (perm_matrix(s, d) * schur_->matrix.adjoint()));
    }
    // For real S, M(U, s)^T = M(U^T, s^{-1}), and with yt = Y^T for Y = U^{(x) n} P(s) S^dagger
    // the product S Y is (yt S^T)^T. So M = yt' S^T with yt' built from (U^T, s^{-1}).
    const CMatrix ut = u.transpose();
    const auto inverse_image = permutation_action(s.inverse(), d);
    CMatrix yt = CMatrix::Zero(dim, dim);
    for (std::size_t x = 0; x < static_cast<std::size_t>(dim); ++x) {
      yt.col(static_cast<Eigen::Index>(inverse_image[x])) = schur_->matrix.col(static_cast<Eigen::Index>(x)).conjugate();
    }
    apply_tensor_power_transposed(yt, ut, n, d);
    return times_st(yt);
  }

  /// U_Sch P(s) U_Sch^dagger. P(s) preserves weight sectors, so only the
  /// diagonal sector blocks are formed.
  CMatrix conjugate(const Permutation& s) const {
    const int d = schur_->d;
    if (s.n() != schur_->n) throw ArgumentError("conjugate: permutation degree differs from n");
    if (!structured_) return conjugate(CMatrix::Identity(d, d), s);
    const auto dim = static_cast<Eigen::Index>(schur_->index.dimension());
    const auto image = permutation_action(s, d);
    CMatrix out = CMatrix::Zero(dim, dim);
    for (const auto& sector : sectors_) {
      const auto k = static_cast<Eigen::Index>(sector.rows.size());
      // (S P)(r, x) = S(r, image[x]).
      RMatrix sp(k, k);
      for (Eigen::Index b = 0; b < k; ++b) {
        const auto target = image[sector.cols[static_cast<std::size_t>(b)]];
        sp.col(b) = sector.w.col(static_cast<Eigen::Index>(local_col_[target]));
      }
      const RMatrix block = sp * sector.w.transpose();
      for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b) {
          out(static_cast<Eigen::Index>(sector.rows[static_cast<std::size_t>(a)]),
              static_cast<Eigen::Index>(sector.rows[static_cast<std::size_t>(b)])) = block(a, b);
        }
      }
    }
    return out;
  }

 private:
  struct Sector {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    RMatrix w;
  };

  void build_sectors() {
    const auto& schur = *schur_;
    const auto dim = schur.index.dimension();
    std::map<std::vector<int>, std::size_t> sector_of;
    std::vector<std::size_t> row_sector(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      auto w = schur.index.label(r).q.weight();
      row_sector[r] = sector_of.emplace(std::move(w), sector_of.size()).first->second;
    }
    sectors_.assign(sector_of.size(), Sector{});
    for (std::size_t r = 0; r < dim; ++r) sectors_[row_sector[r]].rows.push_back(r);

    std::vector<std::size_t> col_sector(dim);
    local_col_.assign(dim, 0);
    for (std::size_t x = 0; x < dim; ++x) {
      std::vector<int> w(static_cast<std::size_t>(schur.d), 0);
      for (int digit : detail::digits_of(x, schur.n, schur.d)) ++w[static_cast<std::size_t>(digit)];
      auto it = sector_of.find(w);
      if (it == sector_of.end()) return fail_structure();
      col_sector[x] = it->second;
      local_col_[x] = sectors_[it->second].cols.size();
      sectors_[it->second].cols.push_back(x);
    }
    for (std::size_t r = 0; r < dim; ++r) {
      for (const auto& [x, v] : row_entries_[r]) {
        if (v.imag() != 0.0 || col_sector[x] != row_sector[r]) return fail_structure();
      }
    }
    for (auto& sector : sectors_) {
      if (sector.rows.size() != sector.cols.size()) return fail_structure();
      const auto k = static_cast<Eigen::Index>(sector.rows.size());
      sector.w = RMatrix::Zero(k, k);
      for (Eigen::Index a = 0; a < k; ++a) {
        for (const auto& [x, v] : row_entries_[sector.rows[static_cast<std::size_t>(a)]]) {
          sector.w(a, static_cast<Eigen::Index>(local_col_[x])) = v.real();
        }
      }
    }
    structured_ = true;
  }

  void fail_structure() {
    structured_ = false;
    sectors_.clear();
  }

  void check_square(const CMatrix& x) const {
    const auto dim = static_cast<Eigen::Index>(schur_->index.dimension());
    if (x.rows() != dim || x.cols() != dim) throw ArgumentError("conjugate: matrix must be d^n x d^n");
  }

  /// A S^T using the sector blocks: columns of A are gathered per sector.
  CMatrix times_st(const CMatrix& a) const {
    const auto rows = a.rows();
    CMatrix out(rows, a.cols());
    for (const auto& sector : sectors_) {
      const auto k = static_cast<Eigen::Index>(sector.rows.size());
      RMatrix re(rows, k);
      RMatrix im(rows, k);
      for (Eigen::Index b = 0; b < k; ++b) {
        const auto src = a.col(static_cast<Eigen::Index>(sector.cols[static_cast<std::size_t>(b)]));
        re.col(b) = src.real();
        im.col(b) = src.imag();
      }
      const RMatrix out_re = re * sector.w.transpose();
      const RMatrix out_im = im * sector.w.transpose();
      for (Eigen::Index b = 0; b < k; ++b) {
        auto dst = out.col(static_cast<Eigen::Index>(sector.rows[static_cast<std::size_t>(b)]));
        dst.real() = out_re.col(b);
        dst.imag() = out_im.col(b);
      }
    }
    return out;
  }

  /// U|x_1> (x) ... (x) U|x_n>.
  static void product_state(const CMatrix& u, std::size_t x, int n, int d, CVector& out) {
    const auto digits = detail::digits_of(x, n, d);
    Eigen::Index len = 1;
    out(0) = 1.0;
    for (int k = 0; k < n; ++k) {
      const auto col = u.col(digits[static_cast<std::size_t>(k)]);
      for (Eigen::Index a = len - 1; a >= 0; --a) out.segment(a * d, d) = out(a) * col;
      len *= d;
    }
  }

  /// yt <- yt (U^{(x) n})^T, one tensor factor at a time, as column operations.
  static void apply_tensor_power_transposed(CMatrix& yt, const CMatrix& u, int n, int d) {
    const auto dim = yt.cols();
    CMatrix gathered(yt.rows(), d);
    Eigen::Index stride = dim;
    for (int m = 0; m < n; ++m) {
      stride /= d;
      const Eigen::Index span = stride * d;
      for (Eigen::Index base = 0; base < dim; base += span) {
        for (Eigen::Index inner = 0; inner < stride; ++inner) {
          for (int l = 0; l < d; ++l) gathered.col(l) = yt.col(base + inner + l * stride);
          for (int k = 0; k < d; ++k) {
            yt.col(base + inner + k * stride).noalias() = gathered * u.row(k).transpose();
          }
        }
      }
    }
  }

  const SchurUnitary* schur_;
  bool structured_ = false;
  std::size_t nonzeros_ = 0;
  std::vector<std::vector<std::pair<std::size_t, Complex>>> row_entries_;
  std::vector<Sector> sectors_;
  std::vector<std::size_t> local_col_;
  };

/// Diagonal block of M for lambda.
inline auto lambda_block(const SchurIndex& index, const CMatrix& m, const Partition& lambda) {
  const auto& b = index.block(lambda);
  const auto k = static_cast<Eigen::Index>(b.size());
  return m.block(static_cast<Eigen::Index>(b.offset), static_cast<Eigen::Index>(b.offset), k, k);
}

/// Frobenius norm of everything outside the lambda diagonal blocks.
inline double off_block_mass(const SchurIndex& index, const CMatrix& m) {
  double total = 0.0;
  for (const auto& rb : index.blocks()) {
    for (const auto& cb : index.blocks()) {
      if (rb.offset == cb.offset) continue;
      total += m.block(static_cast<Eigen::Index>(rb.offset), static_cast<Eigen::Index>(cb.offset),
                       static_cast<Eigen::Index>(rb.size()), static_cast<Eigen::Index>(cb.size()))
                   .squaredNorm();
    }
  }
  return std::sqrt(total);
}

/// Splits a (q, p)-indexed block B ~ Q (x) P using its largest entry as pivot.
/// Returns the max-abs residual |B - Q (x) P|.
inline double kronecker_factor(const Eigen::Ref<const CMatrix>& block, std::size_t dim_q, std::size_t dim_p, CMatrix* q_out = nullptr,
                               CMatrix* p_out = nullptr) {
  const auto nq = static_cast<Eigen::Index>(dim_q);
  const auto np = static_cast<Eigen::Index>(dim_p);
  if (block.rows() != nq * np || block.cols() != nq * np) {
    throw ArgumentError("kronecker_factor: block size differs from dim_q * dim_p");
  }
  Eigen::Index pr = 0, pc = 0;
  block.cwiseAbs2().maxCoeff(&pr, &pc);
  const Complex pivot = block(pr, pc);
  CMatrix q(nq, nq), p(np, np);
  if (std::abs(pivot) == 0.0) {
    q.setZero();
    p.setZero();
  } else {
    const Eigen::Index q1 = pr / np, p1 = pr % np, q2 = pc / np, p2 = pc % np;
    for (Eigen::Index a = 0; a < nq; ++a) {
      for (Eigen::Index b = 0; b < nq; ++b) q(a, b) = block(a * np + p1, b * np + p2);
    }
    for (Eigen::Index a = 0; a < np; ++a) {
      for (Eigen::Index b = 0; b < np; ++b) p(a, b) = block(q1 * np + a, q2 * np + b) / pivot;
    }
  }
  double residual = 0.0;
  for (Eigen::Index qc = 0; qc < nq; ++qc) {
    for (Eigen::Index pc = 0; pc < np; ++pc) {
      const auto col = block.col(qc * np + pc);
      for (Eigen::Index qr = 0; qr < nq; ++qr) {
        const Complex qv = q(qr, qc);
        for (Eigen::Index pr2 = 0; pr2 < np; ++pr2) {
          const Complex diff = col(qr * np + pr2) - detail::multiply(qv, p(pr2, pc));
          residual = std::max(residual, detail::magnitude(diff));
        }
      }
    }
  }
  if (q_out) *q_out = std::move(q);
  if (p_out) *p_out = std::move(p);
  return residual;
}

/// Max over lambda blocks of the Kronecker factorization residual.
inline double factorization_residual(const SchurIndex& index, const CMatrix& m) {
  double worst = 0.0;
  for (const auto& b : index.blocks()) {
    worst = std::max(worst, kronecker_factor(lambda_block(index, m, b.lambda), b.dim_q, b.dim_p));
  }
  return worst;
}

/// Max residual of each block against I_q (x) P with P read at q index 0:
/// zero iff the block acts only on the path register.
inline double q_constancy_residual(const SchurIndex& index, const CMatrix& m) {
  double worst = 0.0;
  for (const auto& b : index.blocks()) {
    const auto block = lambda_block(index, m, b.lambda);
    const auto np = static_cast<Eigen::Index>(b.dim_p);
    const CMatrix p = block.topLeftCorner(np, np);
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
      for (Eigen::Index r = 0; r < block.rows(); ++r) {
        const Complex expected = (r / np == c / np) ? p(r % np, c % np) : Complex{};
        worst = std::max(worst, detail::magnitude(block(r, c) - expected));
      }
    }
  }
  return worst;
}

namespace detail {

inline constexpr double kIndependenceTolerance = 1e-9;

inline CMatrix read_q_factor(const SchurIndex& index, const CMatrix& m, const Partition& lambda) {
  const auto& b = index.block(lambda);
  const auto block = lambda_block(index, m, lambda);
  const auto nq = static_cast<Eigen::Index>(b.dim_q);
  const auto np = static_cast<Eigen::Index>(b.dim_p);
  CMatrix q(nq, nq);
  for (Eigen::Index a = 0; a < nq; ++a) {
    for (Eigen::Index c = 0; c < nq; ++c) q(a, c) = block(a * np, c * np);
  }
  double residual = 0.0;
  for (Eigen::Index c = 0; c < block.cols(); ++c) {
    for (Eigen::Index r = 0; r < block.rows(); ++r) {
      const Complex expected = (r % np == c % np) ? q(r / np, c / np) : Complex{};
      residual = std::max(residual, detail::magnitude(block(r, c) - expected));
    }
  }
  if (residual > kIndependenceTolerance) {
    throw ConsistencyError("extract_irrep: block depends on the path index (residual " +
                           std::to_string(residual) + ")");
  }
  return q;
}

inline CMatrix read_p_factor(const SchurIndex& index, const CMatrix& m, const Partition& lambda) {
  const auto& b = index.block(lambda);
  const auto block = lambda_block(index, m, lambda);
  const auto np = static_cast<Eigen::Index>(b.dim_p);
  const CMatrix p = block.topLeftCorner(np, np);
  double residual = 0.0;
  for (Eigen::Index c = 0; c < block.cols(); ++c) {
    for (Eigen::Index r = 0; r < block.rows(); ++r) {
      const Complex expected = (r / np == c / np) ? p(r % np, c % np) : Complex{};
      residual = std::max(residual, detail::magnitude(block(r, c) - expected));
    }
  }
  if (residual > kIndependenceTolerance) {
    throw ConsistencyError("extract_perm_irrep: block depends on the GZ index (residual " +
                           std::to_string(residual) + ")");
  }
  return p;
}

}  // namespace detail

/// q_lambda(U), read at path index 0 after checking the block is q_lambda(U) (x) I.
inline CMatrix extract_irrep(const SchurConjugator& conj, const Partition& lambda, const CMatrix& u) {
  const auto& schur = conj.schur();
  const auto m = conj.conjugate(u, Permutation::identity(schur.n));
  return detail::read_q_factor(schur.index, m, lambda);
}

inline CMatrix extract_irrep(const SchurUnitary& schur, const Partition& lambda, const CMatrix& u) {
  return extract_irrep(SchurConjugator(schur), lambda, u);
}

/// p_lambda(s), read at GZ index 0 after checking the block is I (x) p_lambda(s).
inline CMatrix extract_perm_irrep(const SchurConjugator& conj, const Partition& lambda, const Permutation& s) {
  const auto m = conj.conjugate(s);
  return detail::read_p_factor(conj.schur().index, m, lambda);
}

inline CMatrix extract_perm_irrep(const SchurUnitary& schur, const Partition& lambda, const Permutation& s) {
  return extract_perm_irrep(SchurConjugator(schur), lambda, s);
}

}  // namespace schurkit
