#pragma once

// Exact dense linear algebra over Q(i): echelon forms, kernels and a
// lattice of coordinate subspaces kept in reduced row echelon form.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/error.hpp"
#include "leibniz/exact.hpp"

namespace leibniz {

using Vec = std::vector<Gaussian>;

inline Vec zero_vector(std::size_t n) { return Vec(n); }

inline Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec& axpy(Vec& y, const Gaussian& a, const Vec& x) {
  if (y.size() != x.size()) throw DimensionMismatch("vector lengths differ");
  if (a.is_zero()) return y;
  for (std::size_t k = 0; k < x.size(); ++k) y[k].add_product(a, x[k]);
  return y;
}

inline Vec operator+(Vec a, const Vec& b) { return axpy(a, Gaussian(1), b); }
inline Vec operator-(Vec a, const Vec& b) { return axpy(a, Gaussian(-1), b); }
inline Vec operator*(const Gaussian& s, Vec v) {
  for (auto& x : v) x *= s;
  return v;
}

/// Row-major dense matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Gaussian& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Gaussian& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const { return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)}; }
  Vec col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<Vec> row_vectors() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Column-vector product m * v.
  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r].add_product((*this)(r, c), v[c]);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Gaussian& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j).add_product(aik, b(k, j));
      }
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator*(const Gaussian& s, Matrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      out += r ? ", [" : "[";
      for (std::size_t c = 0; c < cols_; ++c) out += (c ? ", " : "") + (*this)(r, c).to_string();
      out += "]";
    }
    return out + "]";
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gaussian> data_;
};

struct RrefResult {
  Matrix reduced;                   // nonzero rows only
  std::vector<std::size_t> pivots;  // strictly increasing
};

namespace detail {

// Gauss-Jordan elimination in place on a row list; returns pivot columns.
// Rows past the rank are left zero and removed by the caller.
inline std::vector<std::size_t> gauss_jordan(std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Vec& piv = rows[rank];
    if (!(piv[c] == Gaussian(1))) {
      Gaussian inv = piv[c].inverse();
      for (std::size_t k = c; k < cols; ++k)
        if (!piv[k].is_zero()) piv[k] *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      Gaussian factor = -rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k].add_product(factor, piv[k]);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

}  // namespace detail

inline RrefResult rref(const Matrix& m) {
  std::vector<Vec> rows = m.row_vectors();
  auto pivots = detail::gauss_jordan(rows, m.cols());
  return {Matrix::from_rows(rows, m.cols()), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

inline Gaussian determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  std::vector<Vec> a = m.row_vectors();
  const std::size_t n = m.rows();
  Gaussian det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a[sel][c].is_zero()) ++sel;
    if (sel == n) return {};
    if (sel != c) {
      std::swap(a[sel], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Gaussian inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Gaussian factor = -(a[r][c] * inv);
      for (std::size_t k = c; k < n; ++k) a[r][k].add_product(factor, a[c][k]);
    }
  }
  return det;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<Vec> rows(n, Vec(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = m(r, c);
    rows[r][n + r] = 1;
  }
  auto pivots = detail::gauss_jordan(rows, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rows[r][n + c];
  return inv;
}

/// Coordinate subspace of Q(i)^n with a canonical RREF basis (rows).
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient) { return span(ambient, Matrix::identity(ambient).row_vectors()); }

  static Subspace span(std::size_t ambient, std::vector<Vec> vectors) {
    for (const auto& v : vectors)
      if (v.size() != ambient) throw DimensionMismatch("vector length differs from ambient dimension");
    Subspace s(ambient);
    s.pivots_ = detail::gauss_jordan(vectors, ambient);
    s.basis_ = Matrix::from_rows(vectors, ambient);
    return s;
  }

  /// Span of the unit vectors with the given indices.
  static Subspace coordinates(std::size_t ambient, const std::vector<std::size_t>& indices) {
    std::vector<Vec> vs;
    for (auto i : indices) vs.push_back(unit_vector(ambient, i));
    return span(ambient, std::move(vs));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  std::vector<Vec> vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates of `v` in the RREF basis, or nullopt when v is outside.
  std::optional<Vec> coordinates_of(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
    Vec coeffs(dim());
    Vec residual = v;
    for (std::size_t r = 0; r < dim(); ++r) {
      coeffs[r] = residual[pivots_[r]];
      if (coeffs[r].is_zero()) continue;
      Gaussian neg = -coeffs[r];
      for (std::size_t c = pivots_[r]; c < ambient_; ++c) residual[c].add_product(neg, basis_(r, c));
    }
    if (!leibniz::is_zero(residual)) return std::nullopt;
    return coeffs;
  }

  bool contains(const Vec& v) const { return coordinates_of(v).has_value(); }
  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (std::size_t r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_.row(r))) return false;
    return true;
  }

  Subspace sum(const Subspace& other) const {
    check_ambient(other);
    auto vs = vectors();
    for (auto& v : other.vectors()) vs.push_back(std::move(v));
    return span(ambient_, std::move(vs));
  }

  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void check_ambient(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0}.
inline Subspace kernel(const Matrix& m) {
  auto [red, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, std::move(basis));
}

inline Subspace Subspace::intersect(const Subspace& other) const {
  check_ambient(other);
  // Solve sum_i s_i a_i - sum_j t_j b_j = 0 and map the s-part back.
  const std::size_t p = dim(), q = other.dim();
  Matrix stacked(ambient_, p + q);
  for (std::size_t c = 0; c < ambient_; ++c) {
    for (std::size_t i = 0; i < p; ++i) stacked(c, i) = basis_(i, c);
    for (std::size_t j = 0; j < q; ++j) stacked(c, p + j) = -other.basis_(j, c);
  }
  std::vector<Vec> out;
  for (const auto& sol : kernel(stacked).vectors()) {
    Vec v(ambient_);
    for (std::size_t i = 0; i < p; ++i) axpy(v, sol[i], basis_.row(i));
    out.push_back(std::move(v));
  }
  return span(ambient_, std::move(out));
}

enum class SubspaceOp { sum, intersect };

inline Subspace subspace_op(SubspaceOp op, const Subspace& a, const Subspace& b) {
  return op == SubspaceOp::sum ? a.sum(b) : a.intersect(b);
}

/// One exact solution of m x = rhs with free variables set to zero.
inline std::optional<Vec> solve_linear(const Matrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  const std::size_t n = m.cols();
  std::vector<Vec> rows(m.rows(), Vec(n + 1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = m(r, c);
    rows[r][n] = rhs[r];
  }
  auto pivots = detail::gauss_jordan(rows, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vec x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][n];
  return x;
}

}  // namespace leibniz
