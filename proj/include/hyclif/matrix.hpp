#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hyclif/error.hpp"
#include "hyclif/scalar.hpp"

namespace hyclif {

using Vector = std::vector<Scalar>;

// Dense exact matrix over Q(sqrt 2), row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(Errc::invalid_argument, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<Vector>& cols) {
    return from_rows(cols).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Scalar trace() const {
    require_square("trace");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
  }
  bool is_symmetric() const { return is_square() && *this == transpose(); }

  // Fraction-free (Bareiss) determinant.
  Scalar det() const {
    require_square("det");
    if (rows_ == 0) return 1;
    Matrix a = *this;
    Scalar prev = 1;
    int sign = 1;
    const std::size_t n = rows_;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k).is_zero()) {
        std::size_t p = k + 1;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return 0;
        a.swap_rows(k, p);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          Scalar v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
          a(i, j) = v / prev;
        }
      }
      prev = a(k, k);
    }
    Scalar d = a(n - 1, n - 1);
    return sign < 0 ? -d : d;
  }

  // Fraction-free (Bareiss) elimination; rank is exact over the field.
  std::size_t rank() const {
    Matrix a = *this;
    Scalar prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && a(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      a.swap_rows(r, p);
      for (std::size_t i = r + 1; i < rows_; ++i) {
        for (std::size_t j = c + 1; j < cols_; ++j) {
          Scalar v = a(i, j) * a(r, c) - a(i, c) * a(r, j);
          a(i, j) = v / prev;
        }
        a(i, c) = 0;
      }
      prev = a(r, c);
      ++r;
    }
    return r;
  }

  // Reduced row echelon form with pivots chosen left to right: (reduced, pivot columns).
  std::pair<Matrix, std::vector<std::size_t>> rref() const {
    Matrix a = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && a(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      a.swap_rows(r, p);
      const Scalar inv = a(r, c).inverse();
      for (std::size_t j = c; j < cols_; ++j) a(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || a(i, c).is_zero()) continue;
        const Scalar f = a(i, c);
        for (std::size_t j = c; j < cols_; ++j) a(i, j) -= f * a(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return {std::move(a), std::move(pivots)};
  }

  // Basis of {x : A x = 0}, one vector per free column, in column order.
  std::vector<Vector> nullspace() const {
    const auto [r, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      Vector v(cols_);
      v[f] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Matrix inverse() const {
    require_square("inverse");
    const std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = 1;
    }
    const auto [r, pivots] = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(Errc::domain, "singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
  }

  // Some solution of A x = b, or nullopt when inconsistent.
  std::optional<Vector> solve(const Vector& b) const {
    if (b.size() != rows_) throw Error(Errc::invalid_argument, "solve: dimension mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    const auto [r, pivots] = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    Vector x(cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, cols_);
    return x;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::invalid_argument, "matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) c(i, j).add_product(aik, b(k, j), 1);
        }
      }
    }
    return c;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw Error(Errc::invalid_argument, "matrix-vector: shape mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!a(i, j).is_zero() && !v[j].is_zero()) out[i].add_product(a(i, j), v[j], 1);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

private:
  void require_square(const char* what) const {
    if (!is_square()) throw Error(Errc::invalid_argument, std::string(what) + ": matrix not square");
  }
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(Errc::invalid_argument, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Scalar dot(const Vector& a, const Vector& b) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i], 1);
  return s;
}

inline Vector operator+(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline Vector operator-(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline Vector operator*(const Scalar& s, Vector a) {
  for (auto& x : a) x *= s;
  return a;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline std::size_t rank_of(const std::vector<Vector>& rows) {
  if (rows.empty()) return 0;
  return Matrix::from_rows(rows).rank();
}

// Row-major text, one row per line, entries separated by two spaces.
inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << "  ";
      os << m(i, j);
    }
    os << '\n';
  }
  return os;
}

}  // namespace hyclif
