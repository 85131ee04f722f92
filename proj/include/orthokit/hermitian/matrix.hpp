#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthokit/error.hpp"
#include "orthokit/hermitian/scalar.hpp"

namespace orthokit {

template <class S>
using Vec = std::vector<S>;

// Dense row-major matrix over an exact field.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw invalid_input("matrix entry count does not match its shape");
  }
  Matrix(std::initializer_list<std::initializer_list<S>> rows) : rows_(rows.size()) {
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw invalid_input("ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix column(const Vec<S>& v) { return Matrix(v.size(), 1, v); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<S> row(std::size_t i) const { return Vec<S>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  Vec<S> col(std::size_t j) const {
    Vec<S> v;
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix conjugate() const {
    Matrix t(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) t.a_[k] = conj(a_[k]);
    return t;
  }
  Matrix conj_transpose() const { return transpose().conjugate(); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!orthokit::is_zero(x)) return false;
    return true;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    x.require_same_shape(y);
    Matrix z(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = x.a_[k] + y.a_[k];
    return z;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    x.require_same_shape(y);
    Matrix z(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = x.a_[k] - y.a_[k];
    return z;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw invalid_input("matrix product shape mismatch");
    Matrix z(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const S& xik = x(i, k);
        if (orthokit::is_zero(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) z(i, j) += S(xik * y(k, j));
      }
    return z;
  }
  friend Matrix operator*(const S& c, const Matrix& x) {
    Matrix z(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = c * x.a_[k];
    return z;
  }
  friend Vec<S> operator*(const Matrix& x, const Vec<S>& v) {
    if (x.cols_ != v.size()) throw invalid_input("matrix-vector shape mismatch");
    Vec<S> out(x.rows_, S(0));
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < x.cols_; ++j) out[i] += S(x(i, j) * v[j]);
    return out;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw invalid_input("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> a_;
};

template <class S>
Matrix<S> block_diagonal(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// [a | b]
template <class S>
Matrix<S> hconcat(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw invalid_input("hconcat row mismatch");
  Matrix<S> m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

template <class S>
Matrix<S> vconcat(const Matrix<S>& a, const Matrix<S>& b) {
  return hconcat(a.transpose(), b.transpose()).transpose();
}

template <class S>
struct Echelon {
  Matrix<S> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row-echelon form by Gauss-Jordan elimination.
template <class S>
Echelon<S> rref(Matrix<S> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const S inv = S(1) / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = S(m(r, j) * inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= S(f * m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class S>
std::size_t rank(const Matrix<S>& m) {
  return rref(m).pivots.size();
}

// Basis of {x : m x = 0}, one vector per free column.
template <class S>
std::vector<Vec<S>> nullspace(const Matrix<S>& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec<S>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<S> v(m.cols(), S(0));
    v[free] = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

// Solves a x = b for square invertible a; nullopt when a is singular.
template <class S>
std::optional<Matrix<S>> solve(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) throw invalid_input("solve shape mismatch");
  const auto e = rref(hconcat(a, b));
  const std::size_t n = a.rows();
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, b.cols());
}

// Some x with a x = b, free variables set to zero; nullopt when inconsistent.
template <class S>
std::optional<Matrix<S>> particular_solution(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw invalid_input("solve shape mismatch");
  const auto e = rref(hconcat(a, b));
  const std::size_t n = a.cols();
  Matrix<S> x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
  }
  return x;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a) {
  return solve(a, Matrix<S>::identity(a.rows()));
}

template <class S>
S determinant(Matrix<S> m) {
  if (m.rows() != m.cols()) throw invalid_input("determinant of a non-square matrix");
  S det(1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = c;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) return S(0);
    if (p != c) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = S(det * m(c, c));
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      const S f = S(m(i, c) / m(c, c));
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= S(f * m(c, j));
    }
  }
  return det;
}

template <class S>
std::string to_string(const Matrix<S>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + scalar_traits<S>::format(m(i, j));
    s += "]";
  }
  return s + "]";
}

template <class S>
std::string to_string(const Vec<S>& v) {
  std::string s = "(";
  for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + scalar_traits<S>::format(v[j]);
  return s + ")";
}

}  // namespace orthokit
